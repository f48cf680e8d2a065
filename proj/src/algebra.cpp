#include "hopfcoh/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfcoh {

void PBWElement::add_term(const PBWKey& k, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  PBWElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const { return *this + (-o); }

PBWElement PBWElement::operator-() const {
  PBWElement r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

PBWElement PBWElement::scaled(const CycNum& c) const {
  PBWElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) {
    CycNum w = v * c;
    if (!w.is_zero()) r.terms_.emplace(k, w);
  }
  return r;
}

bool PBWElement::operator==(const PBWElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [k, c] : terms_) {
    if (!(it->first == k) || it->second != c) return false;
    ++it;
  }
  return true;
}

namespace {

std::vector<std::string> default_names(int n, const std::string& stem) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

std::vector<std::vector<CycNum>> complete_q(std::vector<std::vector<CycNum>> q) {
  int n = static_cast<int>(q.size());
  for (int i = 0; i < n; ++i) {
    q[i][i] = CycNum::one();
    for (int j = 0; j < i; ++j) q[i][j] = q[j][i].inverse();
  }
  return q;
}

}  // namespace

AlgebraPresentation AlgebraPresentation::qci(std::vector<unsigned long> trunc,
                                             std::vector<std::vector<CycNum>> q_upper,
                                             std::vector<int> heights,
                                             std::vector<std::string> names) {
  AlgebraPresentation p;
  p.flavor_ = Flavor::Qci;
  p.ngens_ = static_cast<int>(trunc.size());
  p.trunc_ = trunc;
  p.deg_ref_ = std::move(trunc);
  p.heights_ = heights.empty() ? std::vector<int>(p.ngens_, 1) : std::move(heights);
  p.names_ = names.empty() ? default_names(p.ngens_, "x") : std::move(names);
  p.q_ = complete_q(std::move(q_upper));
  return p;
}

AlgebraPresentation AlgebraPresentation::qci_smash(std::vector<unsigned long> trunc,
                                                   std::vector<std::vector<CycNum>> q_upper,
                                                   FiniteAbelianGroup group,
                                                   std::vector<Character> gen_chars,
                                                   std::vector<int> heights,
                                                   std::vector<std::string> names) {
  AlgebraPresentation p =
      qci(std::move(trunc), std::move(q_upper), std::move(heights), std::move(names));
  p.flavor_ = Flavor::QciSmash;
  p.group_ = std::move(group);
  p.gen_char_ = std::move(gen_chars);
  if (static_cast<int>(p.gen_char_.size()) != p.ngens_)
    throw std::invalid_argument("qci_smash: one character per generator required");
  return p;
}

AlgebraPresentation AlgebraPresentation::nichols_a2(unsigned long ell, long q_power,
                                                    bool truncated) {
  if (ell < 3 || ell % 2 == 0 ||
      std::gcd(static_cast<unsigned long>(((q_power % static_cast<long>(ell)) +
                                           static_cast<long>(ell)) %
                                          static_cast<long>(ell)),
               ell) != 1)
    throw std::invalid_argument("nichols_a2: q must be a primitive root of odd order >= 3");
  AlgebraPresentation p;
  p.flavor_ = truncated ? Flavor::NicholsA2 : Flavor::NicholsA2Untruncated;
  p.ngens_ = 3;
  p.names_ = {"x1", "x12", "x2"};
  p.trunc_ = truncated ? std::vector<unsigned long>{ell, ell, ell}
                       : std::vector<unsigned long>{0, 0, 0};
  p.deg_ref_ = {ell, ell, ell};
  p.heights_ = {1, 2, 1};
  CycNum q = CycNum::root_of_unity(ell, q_power);
  std::vector<std::vector<CycNum>> qm(3, std::vector<CycNum>(3, CycNum::one()));
  qm[0][1] = q;
  qm[0][2] = q.inverse();
  qm[1][2] = q;
  p.q_ = complete_q(std::move(qm));
  long l = static_cast<long>(ell);
  p.action_group_ = FiniteAbelianGroup{{l, l}};
  p.gen_char_ = {char_reduce(*p.action_group_, {2 * q_power, -q_power}),
                 char_reduce(*p.action_group_, {q_power, q_power}),
                 char_reduce(*p.action_group_, {-q_power, 2 * q_power})};
  return p;
}

AlgebraPresentation AlgebraPresentation::uq_sl2(unsigned long ell, long q_power,
                                                const CycNum& lambda, bool truncated) {
  if (ell < 3 || ell % 2 == 0 ||
      std::gcd(static_cast<unsigned long>(((q_power % static_cast<long>(ell)) +
                                           static_cast<long>(ell)) %
                                          static_cast<long>(ell)),
               ell) != 1)
    throw std::invalid_argument("uq_sl2: q must be a primitive root of odd order >= 3");
  AlgebraPresentation p;
  p.flavor_ = Flavor::UqSl2;
  p.ngens_ = 2;
  p.names_ = {"F", "E"};
  p.trunc_ = truncated ? std::vector<unsigned long>{ell, ell} : std::vector<unsigned long>{0, 0};
  p.deg_ref_ = {ell, ell};
  p.heights_ = {1, 1};
  std::vector<std::vector<CycNum>> qm(2, std::vector<CycNum>(2, CycNum::one()));
  qm[0][1] = CycNum::one();  // EF - FE lands in kGamma; the leading swap is trivial
  p.q_ = complete_q(std::move(qm));
  p.group_ = FiniteAbelianGroup{{static_cast<long>(ell)}};
  long e = static_cast<long>(ell);
  p.gen_char_ = {char_reduce(*p.group_, {(-2 * q_power) % e}),
                 char_reduce(*p.group_, {(2 * q_power) % e})};
  p.lambda_ = lambda;
  return p;
}

bool AlgebraPresentation::truncated() const {
  return std::all_of(trunc_.begin(), trunc_.end(), [](unsigned long n) { return n > 0; });
}

unsigned long AlgebraPresentation::scalar_order() const {
  unsigned long L = 1;
  for (const auto& row : q_)
    for (const CycNum& v : row) L = std::lcm(L, v.order());
  if (group_) L = std::lcm(L, group_->cyclotomic_order());
  if (!lambda_.is_zero()) L = std::lcm(L, lambda_.order());
  return L;
}

PBWElement AlgebraPresentation::one() const {
  return monomial(std::vector<unsigned>(ngens_, 0));
}

PBWElement AlgebraPresentation::gen(int i) const {
  std::vector<unsigned> e(ngens_, 0);
  e[i] = 1;
  return monomial(e);
}

PBWElement AlgebraPresentation::group_element(const GroupElement& g) const {
  if (!group_) throw std::invalid_argument("presentation has no group part");
  PBWKey k{std::vector<unsigned>(ngens_, 0), group_reduce(*group_, g.exps).exps};
  PBWElement e;
  e.add_term(k, CycNum::one());
  return e;
}

PBWElement AlgebraPresentation::monomial(const std::vector<unsigned>& exps) const {
  if (static_cast<int>(exps.size()) != ngens_)
    throw std::invalid_argument("monomial: wrong exponent count");
  PBWKey k{exps, group_ ? std::vector<long>(group_->rank(), 0) : std::vector<long>{}};
  PBWElement e;
  e.add_term(k, CycNum::one());
  return e;
}

CycNum AlgebraPresentation::monomial_char_value(const std::vector<unsigned>& exps,
                                                const GroupElement& g) const {
  const FiniteAbelianGroup* G = action_group();
  if (!G) throw std::invalid_argument("presentation has no group action");
  CycNum v = CycNum::one();
  for (int i = 0; i < ngens_; ++i) {
    if (exps[i] == 0) continue;
    v *= char_value(*G, gen_char_[i], g).pow(static_cast<long>(exps[i]));
  }
  return v;
}

void AlgebraPresentation::check_element(const PBWElement& e) const {
  for (const auto& [k, c] : e.terms()) {
    (void)c;
    if (static_cast<int>(k.exps.size()) != ngens_ ||
        k.grp.size() != (group_ ? group_->rank() : 0))
      throw std::invalid_argument("element does not belong to this presentation");
  }
}

std::vector<AlgebraPresentation::RuleTerm> AlgebraPresentation::swap_rule(int hi, int lo) const {
  // Normal form of x_hi * x_lo for hi > lo.
  switch (flavor_) {
    case Flavor::Qci:
    case Flavor::QciSmash:
      return {{{lo, hi}, 0, q_[lo][hi].inverse()}};
    case Flavor::NicholsA2:
    case Flavor::NicholsA2Untruncated: {
      const CycNum& q = q_[0][1];
      if (hi == 1 && lo == 0) return {{{0, 1}, 0, q.inverse()}};      // x12 x1
      if (hi == 2 && lo == 1) return {{{1, 2}, 0, q.inverse()}};      // x2 x12
      if (hi == 2 && lo == 0) return {{{0, 2}, 0, q}, {{1}, 0, -q}};  // x2 x1
      break;
    }
    case Flavor::UqSl2: {
      // E F = F E + lambda (K^{-1} - K)
      if (hi == 1 && lo == 0)
        return {{{0, 1}, 0, CycNum::one()}, {{}, -1, lambda_}, {{}, +1, -lambda_}};
      break;
    }
  }
  throw std::logic_error("swap_rule: no rule for this generator pair");
}

void AlgebraPresentation::straighten(std::vector<int> word, std::vector<long> grp, CycNum coeff,
                                     PBWElement& out, std::mt19937_64* rng) const {
  struct Item {
    std::vector<int> word;
    std::vector<long> grp;
    CycNum coeff;
  };
  std::vector<Item> stack;
  stack.push_back({std::move(word), std::move(grp), std::move(coeff)});
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    // locate out-of-order adjacent pairs
    std::vector<size_t> desc;
    for (size_t t = 0; t + 1 < it.word.size(); ++t)
      if (it.word[t] > it.word[t + 1]) desc.push_back(t);
    if (desc.empty()) {
      PBWKey k;
      k.exps.assign(ngens_, 0);
      bool dead = false;
      for (int g : it.word) {
        ++k.exps[g];
        if (trunc_[g] != 0 && k.exps[g] >= trunc_[g]) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      k.grp = group_ ? group_reduce(*group_, it.grp).exps : std::vector<long>{};
      out.add_term(k, it.coeff);
      continue;
    }
    size_t t = desc.front();
    if (rng) t = desc[(*rng)() % desc.size()];
    int hi = it.word[t], lo = it.word[t + 1];
    for (const RuleTerm& rt : swap_rule(hi, lo)) {
      Item nx;
      nx.word.assign(it.word.begin(), it.word.begin() + static_cast<long>(t));
      nx.word.insert(nx.word.end(), rt.fragment.begin(), rt.fragment.end());
      nx.word.insert(nx.word.end(), it.word.begin() + static_cast<long>(t) + 2, it.word.end());
      nx.grp = it.grp;
      nx.coeff = it.coeff * rt.coeff;
      if (rt.grp_delta != 0) {
        // the emitted group power commutes to the right end past the suffix
        GroupElement delta = group_reduce(*group_, {rt.grp_delta});
        for (size_t s = t + 2; s < it.word.size(); ++s)
          nx.coeff *= char_value(*group_, gen_char_[it.word[s]], delta);
        nx.grp[0] += rt.grp_delta;
      }
      if (!nx.coeff.is_zero()) stack.push_back(std::move(nx));
    }
  }
}

PBWElement AlgebraPresentation::multiply(const PBWElement& a, const PBWElement& b) const {
  check_element(a);
  check_element(b);
  bool plain_q = flavor_ == Flavor::Qci || flavor_ == Flavor::QciSmash;
  PBWElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      CycNum coeff = ca * cb;
      std::vector<long> grp;
      if (group_) {
        GroupElement ga{ka.grp};
        coeff *= monomial_char_value(kb.exps, ga);
        grp = group_mul(*group_, ga, GroupElement{kb.grp}).exps;
      }
      if (plain_q) {
        // closed form: x^a x^b = prod_{i<m} q_im^{-b_i a_m} x^{a+b}
        PBWKey k;
        k.exps.resize(static_cast<size_t>(ngens_));
        bool dead = false;
        for (int i = 0; i < ngens_ && !dead; ++i) {
          unsigned e = ka.exps[static_cast<size_t>(i)] + kb.exps[static_cast<size_t>(i)];
          if (trunc_[static_cast<size_t>(i)] != 0 && e >= trunc_[static_cast<size_t>(i)])
            dead = true;
          k.exps[static_cast<size_t>(i)] = e;
        }
        if (dead) continue;
        for (int i = 0; i < ngens_; ++i) {
          unsigned bi = kb.exps[static_cast<size_t>(i)];
          if (bi == 0) continue;
          for (int m = i + 1; m < ngens_; ++m) {
            unsigned am = ka.exps[static_cast<size_t>(m)];
            if (am == 0) continue;
            coeff *= q_[static_cast<size_t>(i)][static_cast<size_t>(m)].pow(
                -static_cast<long>(bi) * static_cast<long>(am));
          }
        }
        k.grp = std::move(grp);
        out.add_term(k, coeff);
        continue;
      }
      std::vector<int> word;
      for (int i = 0; i < ngens_; ++i) word.insert(word.end(), ka.exps[i], i);
      for (int i = 0; i < ngens_; ++i) word.insert(word.end(), kb.exps[i], i);
      straighten(std::move(word), std::move(grp), std::move(coeff), out, nullptr);
    }
  }
  return out;
}

PBWElement AlgebraPresentation::group_act(const GroupElement& h, const PBWElement& e) const {
  if (!action_group()) throw std::invalid_argument("group_act: presentation has no group action");
  check_element(e);
  PBWElement out;
  for (const auto& [k, c] : e.terms()) out.add_term(k, c * monomial_char_value(k.exps, h));
  return out;
}

PBWElement AlgebraPresentation::braided_commutator(const PBWElement& x, const PBWElement& y,
                                                   const GroupElement& g) const {
  if (!action_group())
    throw std::invalid_argument("braided_commutator: presentation has no group action");
  check_element(x);
  check_element(y);
  // y must be Gamma-homogeneous: all monomials scale identically under g.
  bool first = true;
  CycNum scale;
  for (const auto& [k, c] : y.terms()) {
    (void)c;
    CycNum s = monomial_char_value(k.exps, g);
    if (first) {
      scale = s;
      first = false;
    } else if (s != scale) {
      throw std::invalid_argument("braided_commutator: y is not Gamma-homogeneous");
    }
  }
  return multiply(x, y) - multiply(group_act(g, y), x);
}

CycNum AlgebraPresentation::augmentation(const PBWElement& e) const {
  check_element(e);
  CycNum v = CycNum::zero();
  for (const auto& [k, c] : e.terms()) {
    if (std::all_of(k.exps.begin(), k.exps.end(), [](unsigned x) { return x == 0; })) v += c;
  }
  return v;
}

mpz_class AlgebraPresentation::filtration_degree(const std::vector<unsigned>& exps) const {
  if (static_cast<int>(exps.size()) != ngens_)
    throw std::invalid_argument("filtration_degree: wrong exponent count");
  mpz_class all(1);
  for (unsigned long n : deg_ref_) {
    if (n == 0) throw std::domain_error("filtration_degree: no reference truncation");
    all *= static_cast<unsigned long>(n);
  }
  mpz_class weighted(0);
  for (int i = 0; i < ngens_; ++i) weighted += mpz_class(exps[i]) * heights_[i];
  mpz_class deg = all * weighted;
  mpz_class place(1);
  for (int i = 0; i < ngens_; ++i) {
    deg += place * exps[i];
    place *= static_cast<unsigned long>(deg_ref_[i]);
  }
  return deg;
}

std::vector<long> AlgebraPresentation::filtration_tuple(const std::vector<unsigned>& exps) const {
  std::vector<long> t;
  long weighted = 0;
  for (int i = 0; i < ngens_; ++i) weighted += static_cast<long>(exps[i]) * heights_[i];
  t.push_back(weighted);
  for (int i = ngens_ - 1; i >= 0; --i) t.push_back(exps[i]);
  return t;
}

mpz_class AlgebraPresentation::dimension() const {
  if (!truncated()) throw std::domain_error("dimension: untruncated presentation is infinite");
  mpz_class d(1);
  for (unsigned long n : trunc_) d *= n;
  if (group_) {
    for (long o : group_->orders) d *= o;
  }
  return d;
}

AlgebraPresentation AlgebraPresentation::assoc_graded() const {
  if (flavor_ == Flavor::Qci || flavor_ == Flavor::QciSmash) return *this;
  if (flavor_ != Flavor::NicholsA2)
    throw std::invalid_argument("assoc_graded: only defined for nichols_a2 and qci flavors");
  std::vector<std::vector<CycNum>> qm(3, std::vector<CycNum>(3, CycNum::one()));
  qm[0][1] = q_[0][1];
  qm[0][2] = q_[0][2];
  qm[1][2] = q_[1][2];
  return qci(trunc_, std::move(qm), heights_, names_);
}

PBWElement AlgebraPresentation::normal_form(const std::vector<Symbol>& word,
                                            std::mt19937_64* rng) const {
  std::vector<int> gens;
  std::vector<long> grp = group_ ? std::vector<long>(group_->rank(), 0) : std::vector<long>{};
  CycNum coeff = CycNum::one();
  GroupElement acc = group_ ? group_identity(*group_) : GroupElement{};
  for (const Symbol& s : word) {
    if (s.gen >= 0) {
      if (s.gen >= ngens_) throw std::invalid_argument("normal_form: unknown generator symbol");
      if (group_) coeff *= char_value(*group_, gen_char_[s.gen], acc);
      gens.push_back(s.gen);
    } else {
      if (!group_) throw std::invalid_argument("normal_form: group symbol without group");
      acc = group_mul(*group_, acc, group_reduce(*group_, s.grp.exps));
    }
  }
  if (group_) grp = acc.exps;
  PBWElement out;
  straighten(std::move(gens), std::move(grp), std::move(coeff), out, rng);
  return out;
}

std::vector<std::vector<unsigned>> AlgebraPresentation::monomial_basis() const {
  if (!truncated()) throw std::domain_error("monomial_basis: untruncated presentation");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(ngens_, 0);
  while (true) {
    out.push_back(cur);
    int i = 0;
    for (; i < ngens_; ++i) {
      if (++cur[i] < trunc_[i]) break;
      cur[i] = 0;
    }
    if (i == ngens_) break;
  }
  return out;
}

std::string to_string(const AlgebraPresentation& p, const PBWElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    for (int i = 0; i < p.ngens(); ++i) {
      if (k.exps[i] == 0) continue;
      out << "*" << p.gen_name(i);
      if (k.exps[i] > 1) out << "^" << k.exps[i];
    }
    bool gnontriv = std::any_of(k.grp.begin(), k.grp.end(), [](long g) { return g != 0; });
    if (gnontriv) {
      out << "*g[";
      for (size_t j = 0; j < k.grp.size(); ++j) out << (j ? "," : "") << k.grp[j];
      out << "]";
    }
  }
  return out.str();
}

}  // namespace hopfcoh
