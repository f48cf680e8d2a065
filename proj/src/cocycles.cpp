#include "hopfcoh/cocycles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfcoh {

CocycleBuilder::CocycleBuilder(const AugmentedBasis& truncated, AlgebraPresentation lift)
    : A_(&truncated),
      lift_(std::make_shared<AlgebraPresentation>(std::move(lift))),
      memo_(std::make_shared<std::map<MemoKey, CycNum>>()) {
  if (lift_->ngens() != A_->algebra().ngens())
    throw std::invalid_argument("CocycleBuilder: lift has a different generator count");
}

unsigned long CocycleBuilder::ntrunc_gen(int gen) const { return A_->algebra().trunc(gen); }

CycNum CocycleBuilder::pair_coeff(int gen, const std::vector<unsigned>& a,
                                  const std::vector<unsigned>& b) const {
  MemoKey key{gen, a, b};
  auto it = memo_->find(key);
  if (it != memo_->end()) return it->second;
  PBWElement prod = lift_->multiply(lift_->monomial(a), lift_->monomial(b));
  PBWKey target{std::vector<unsigned>(static_cast<size_t>(lift_->ngens()), 0),
                lift_->group() ? std::vector<long>(lift_->group()->rank(), 0)
                               : std::vector<long>{}};
  target.exps[static_cast<size_t>(gen)] = static_cast<unsigned>(ntrunc_gen(gen));
  CycNum val = CycNum::zero();
  auto t = prod.terms().find(target);
  if (t != prod.terms().end()) val = t->second;
  memo_->emplace(std::move(key), val);
  return val;
}

CycNum CocycleBuilder::evaluate_paired(int gen, unsigned long M,
                                       const std::vector<int>& tuple) const {
  const AugmentedBasis& A = *A_;
  const AlgebraPresentation& p = A.algebra();
  CycNum scalar = CycNum::one();
  std::vector<const std::vector<unsigned>*> parts;
  parts.reserve(tuple.size());
  GroupElement acc;  // running product g_1 ... g_{s-1}
  bool have_group = p.group().has_value();
  if (have_group) acc = group_identity(*p.group());
  for (size_t s = 0; s < tuple.size(); ++s) {
    int idx = tuple[s];
    if (A.is_group_minus_one(idx)) return CycNum::zero();
    const PBWKey& k = A.key(idx);
    if (have_group) {
      if (s > 0) scalar *= p.monomial_char_value(k.exps, acc);
      acc = group_mul(*p.group(), acc, GroupElement{k.grp});
    }
    parts.push_back(&k.exps);
  }
  CycNum val = scalar;
  for (unsigned long t = 0; t < M; ++t) {
    val *= pair_coeff(gen, *parts[2 * t], *parts[2 * t + 1]);
    if (val.is_zero()) return val;
  }
  return val;
}

Cochain CocycleBuilder::xi_alpha(int gen) const {
  CocycleBuilder self = *this;
  return Cochain(2, [self, gen](const std::vector<int>& t) {
    return self.evaluate_paired(gen, 1, t);
  });
}

Cochain CocycleBuilder::eta_alpha(int gen) const {
  const AugmentedBasis* A = A_;
  int n = A_->algebra().ngens();
  return Cochain(1, [A, gen, n](const std::vector<int>& t) {
    int idx = t[0];
    if (A->is_group_minus_one(idx)) return CycNum::zero();
    const PBWKey& k = A->key(idx);
    for (long g : k.grp)
      if (g != 0) return CycNum::zero();
    for (int i = 0; i < n; ++i) {
      unsigned want = (i == gen) ? 1u : 0u;
      if (k.exps[static_cast<size_t>(i)] != want) return CycNum::zero();
    }
    return CycNum::one();
  });
}

Cochain CocycleBuilder::f_alpha(int gen, unsigned long M) const {
  CocycleBuilder self = *this;
  return Cochain(static_cast<int>(2 * M), [self, gen, M](const std::vector<int>& t) {
    return self.evaluate_paired(gen, M, t);
  });
}

void BarElement::add(const BarKey& k, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BarElement::operator==(const BarElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [k, c] : terms_) {
    if (!(it->first == k) || it->second != c) return false;
    ++it;
  }
  return true;
}

namespace {

bool is_unit_key(const PBWKey& k) {
  return std::all_of(k.exps.begin(), k.exps.end(), [](unsigned v) { return v == 0; });
}

// partial_m(a0 (x) ... (x) a_m) = sum_j (-1)^j a0 (x) ... a_j a_{j+1} ... (x) a_m
BarElement bar_boundary(const AlgebraPresentation& S, const BarElement& e) {
  BarElement out;
  for (const auto& [k, c] : e.terms()) {
    int m = static_cast<int>(k.slots.size());
    for (int j = 0; j <= m - 1; ++j) {
      PBWElement prod;
      if (j == 0) {
        PBWElement a0;
        a0.add_term(k.a0, CycNum::one());
        PBWElement a1;
        a1.add_term(k.slots[0], CycNum::one());
        prod = S.multiply(a0, a1);
      } else {
        PBWElement aj;
        aj.add_term(k.slots[static_cast<size_t>(j) - 1], CycNum::one());
        PBWElement aj1;
        aj1.add_term(k.slots[static_cast<size_t>(j)], CycNum::one());
        prod = S.multiply(aj, aj1);
      }
      CycNum sign = (j % 2 == 0) ? c : -c;
      for (const auto& [pk, pc] : prod.terms()) {
        BarKey nk;
        if (j == 0) {
          nk.a0 = pk;
          nk.slots.assign(k.slots.begin() + 1, k.slots.end());
        } else {
          nk.a0 = k.a0;
          for (int s = 0; s < m; ++s) {
            if (s == j - 1) {
              if (is_unit_key(pk))
                throw std::logic_error("bar_boundary: unit component in an inner slot");
              nk.slots.push_back(pk);
            } else if (s != j) {
              nk.slots.push_back(k.slots[static_cast<size_t>(s)]);
            }
          }
        }
        out.add(nk, sign * pc);
      }
    }
  }
  return out;
}

PBWKey mono_key(const AlgebraPresentation& S, int i, unsigned e) {
  PBWKey k{std::vector<unsigned>(static_cast<size_t>(S.ngens()), 0),
           S.group() ? std::vector<long>(S.group()->rank(), 0) : std::vector<long>{}};
  k.exps[static_cast<size_t>(i)] = e;
  return k;
}

BarElement apply_F1(const AlgebraPresentation& S, const ResElement& e) {
  BarElement out;
  for (const auto& [a, coef] : e.terms()) {
    int i = -1;
    int total = 0;
    for (size_t s = 0; s < a.size(); ++s) {
      total += static_cast<int>(a[s]);
      if (a[s] == 1) i = static_cast<int>(s);
    }
    if (total != 1) throw std::invalid_argument("F1: element not in K_1");
    for (const auto& [k, c] : coef.terms()) {
      BarKey bk;
      bk.a0 = k;
      bk.slots.push_back(mono_key(S, i, 1));
      out.add(bk, c);
    }
  }
  return out;
}

BarElement apply_F2(const AlgebraPresentation& S, const ResElement& e) {
  BarElement out;
  for (const auto& [a, coef] : e.terms()) {
    int total = 0;
    std::vector<int> support;
    for (size_t s = 0; s < a.size(); ++s) {
      total += static_cast<int>(a[s]);
      if (a[s] > 0) support.push_back(static_cast<int>(s));
    }
    if (total != 2) throw std::invalid_argument("F2: element not in K_2");
    for (const auto& [k, c] : coef.terms()) {
      PBWElement base;
      base.add_term(k, c);
      if (support.size() == 1) {
        int i = support[0];
        unsigned long Ni = S.trunc(i);
        for (unsigned ai = 0; ai <= static_cast<unsigned>(Ni - 2); ++ai) {
          // x_i^{a} (x) x_i (x) x_i^{N_i - a - 1}, the a = 0 slot-0 term is 1
          PBWElement lead = S.multiply(base, S.monomial(mono_key(S, i, ai).exps));
          for (const auto& [lk, lc] : lead.terms()) {
            BarKey bk;
            bk.a0 = lk;
            bk.slots.push_back(mono_key(S, i, 1));
            bk.slots.push_back(mono_key(S, i, static_cast<unsigned>(Ni - ai - 1)));
            out.add(bk, lc);
          }
        }
      } else {
        int i = support[0], j = support[1];
        BarKey bk1;
        bk1.a0 = k;
        bk1.slots.push_back(mono_key(S, i, 1));
        bk1.slots.push_back(mono_key(S, j, 1));
        out.add(bk1, c);
        BarKey bk2;
        bk2.a0 = k;
        bk2.slots.push_back(mono_key(S, j, 1));
        bk2.slots.push_back(mono_key(S, i, 1));
        out.add(bk2, -c * S.q(i, j));
      }
    }
  }
  return out;
}

// eps(a0) * f(slots) for a bar cochain f on the A+ monomial basis.
CycNum pair_bar(const AugmentedBasis& A, const Cochain& f, const BarElement& e) {
  CycNum acc = CycNum::zero();
  for (const auto& [k, c] : e.terms()) {
    if (!is_unit_key(k.a0)) continue;  // eps kills nonunit module parts
    std::vector<int> idx;
    bool ok = true;
    for (const PBWKey& s : k.slots) {
      if (is_unit_key(s)) {
        ok = false;
        break;
      }
      // locate in the basis: monomial-type entries only
      int found = -1;
      for (int b = 0; b < A.size(); ++b) {
        if (!A.is_group_minus_one(b) && A.key(b) == s) {
          found = b;
          break;
        }
      }
      if (found < 0) throw std::logic_error("pair_bar: slot not in the A+ basis");
      idx.push_back(found);
    }
    if (ok) acc += c * f(idx);
  }
  return acc;
}

}  // namespace

ComparisonReport comparison_maps(const CohomologyRing& H) {
  ComparisonReport rep;
  const AlgebraPresentation& S = H.algebra();
  const Resolution& res = H.resolution();
  int r = H.data().rank();

  // commuting squares: partial_2 F2 = F1 d on K_2, partial_1 F1 = d on K_1
  bool squares = true;
  std::string detail;
  for (const ResGenerator& a : res.generators_of_degree(2)) {
    ResElement phi = res.generator(a);
    BarElement lhs = bar_boundary(S, apply_F2(S, phi));
    BarElement rhs = apply_F1(S, res.differential(phi));
    ++rep.checks;
    if (!(lhs == rhs)) {
      squares = false;
      detail = "boundary square fails at a K_2 generator";
      break;
    }
  }
  if (squares) {
    for (const ResGenerator& a : res.generators_of_degree(1)) {
      ResElement phi = res.generator(a);
      // bottom square: partial_1(1 (x) x_i) = x_i agrees with d(Phi(1_i)) in S
      BarElement f1 = apply_F1(S, phi);
      PBWElement lhs;
      for (const auto& [k, c] : f1.terms()) {
        PBWElement a0;
        a0.add_term(k.a0, c);
        PBWElement a1;
        a1.add_term(k.slots[0], CycNum::one());
        lhs = lhs + S.multiply(a0, a1);
      }
      ResElement d = res.differential(phi);
      PBWElement rhs;
      for (const auto& [g, c] : d.terms()) {
        bool zero = std::all_of(g.begin(), g.end(), [](unsigned v) { return v == 0; });
        if (!zero) throw std::logic_error("d(K_1) must land in K_0");
        rhs = rhs + c;
      }
      ++rep.checks;
      if (lhs != rhs) {
        squares = false;
        detail = "augmentation square fails at a K_1 generator";
        break;
      }
    }
  }
  rep.squares_commute = squares;

  // pullbacks: F2*(xi_{beta_i}) dual to Phi(...2_i...), F1*(eta_{beta_i})
  // dual to Phi(...1_i...)
  AugmentedBasis bar_basis(S);
  CocycleBuilder builder(bar_basis, s_presentation_untruncated(H.data()));
  bool pullbacks = true;
  for (int i = 0; i < r && pullbacks; ++i) {
    Cochain xi = builder.xi_alpha(i);
    for (const ResGenerator& a : res.generators_of_degree(2)) {
      CycNum got = pair_bar(bar_basis, xi, apply_F2(S, res.generator(a)));
      bool is_dual = (a[static_cast<size_t>(i)] == 2);
      CycNum want = is_dual ? CycNum::one() : CycNum::zero();
      ++rep.checks;
      if (got != want) {
        pullbacks = false;
        detail = "xi pullback mismatch at generator index " + std::to_string(i);
        break;
      }
    }
    Cochain eta = builder.eta_alpha(i);
    for (const ResGenerator& a : res.generators_of_degree(1)) {
      CycNum got = pair_bar(bar_basis, eta, apply_F1(S, res.generator(a)));
      bool is_dual = (a[static_cast<size_t>(i)] == 1);
      CycNum want = is_dual ? CycNum::one() : CycNum::zero();
      ++rep.checks;
      if (got != want) {
        pullbacks = false;
        detail = "eta pullback mismatch at generator index " + std::to_string(i);
        break;
      }
    }
  }
  rep.pullbacks_match = pullbacks;
  rep.detail = detail;
  return rep;
}

}  // namespace hopfcoh
