#include "hopfcoh/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfcoh {

namespace {

std::string root_label(const Root& r) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < r.coords.size(); ++i) {
    int n = r.coords[i];
    if (n == 0) continue;
    if (!first) os << "+";
    if (n != 1) os << n;
    os << "a" << i + 1;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

long char_exponent(const FiniteAbelianGroup& G, const Character& chi, const GroupElement& g,
                   unsigned long L) {
  long total = 0;
  for (size_t s = 0; s < G.rank(); ++s) {
    long d = G.orders[s];
    long e = (chi.exps[s] * g.exps[s]) % d;
    total = (total + static_cast<long>(L / static_cast<unsigned long>(d)) * e) %
            static_cast<long>(L);
  }
  return total;
}

}  // namespace

GrData gr_data(const CartanDatum& d) {
  require_valid(d);
  GrData gr;
  gr.group = d.group;
  gr.order = d.working_order();
  for (const Root& alpha : positive_roots(d.cartan)) {
    RootData rd = root_data(d, alpha);
    gr.gens.push_back({alpha, root_label(alpha), rd.g_alpha, rd.chi_alpha, rd.N_alpha,
                       rd.M_alpha, height(alpha)});
  }
  int r = gr.rank();
  gr.q.assign(r, std::vector<CycNum>(r, CycNum::one()));
  gr.qexp.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      long e = char_exponent(gr.group, gr.gens[j].chi, gr.gens[i].g, gr.order);
      if (i < j) {
        gr.qexp[i][j] = e;
        gr.q[i][j] = CycNum::root_of_unity(gr.order, e);
      } else {
        // type A1 x ... x A1 convention: q_{ji} := q_{ij}^{-1} for i < j
        gr.qexp[i][j] = (static_cast<long>(gr.order) - gr.qexp[j][i]) %
                        static_cast<long>(gr.order);
        gr.q[i][j] = CycNum::root_of_unity(gr.order, gr.qexp[i][j]);
      }
    }
  }
  return gr;
}

namespace {

std::vector<std::vector<CycNum>> upper_q(const GrData& gr) {
  int r = gr.rank();
  std::vector<std::vector<CycNum>> q(r, std::vector<CycNum>(r, CycNum::one()));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) q[i][j] = gr.q[i][j];
  return q;
}

std::vector<unsigned long> trunc_of(const GrData& gr) {
  std::vector<unsigned long> t;
  for (const auto& g : gr.gens) t.push_back(g.N);
  return t;
}

std::vector<int> heights_of(const GrData& gr) {
  std::vector<int> h;
  for (const auto& g : gr.gens) h.push_back(g.height);
  return h;
}

std::vector<std::string> names_of(const GrData& gr) {
  std::vector<std::string> n;
  for (const auto& g : gr.gens) n.push_back("x[" + g.label + "]");
  return n;
}

}  // namespace

AlgebraPresentation s_presentation(const GrData& gr) {
  return AlgebraPresentation::qci(trunc_of(gr), upper_q(gr), heights_of(gr), names_of(gr));
}

AlgebraPresentation s_presentation_untruncated(const GrData& gr) {
  std::vector<unsigned long> none(static_cast<size_t>(gr.rank()), 0);
  return AlgebraPresentation::qci(none, upper_q(gr), heights_of(gr), names_of(gr));
}

AlgebraPresentation smash_presentation(const GrData& gr) {
  std::vector<Character> chars;
  for (const auto& g : gr.gens) chars.push_back(g.chi);
  return AlgebraPresentation::qci_smash(trunc_of(gr), upper_q(gr), gr.group, chars,
                                        heights_of(gr), names_of(gr));
}

AlgebraPresentation smash_presentation_untruncated(const GrData& gr) {
  std::vector<Character> chars;
  for (const auto& g : gr.gens) chars.push_back(g.chi);
  std::vector<unsigned long> none(static_cast<size_t>(gr.rank()), 0);
  return AlgebraPresentation::qci_smash(none, upper_q(gr), gr.group, chars, heights_of(gr),
                                        names_of(gr));
}

GrData gr_raw(std::vector<unsigned long> trunc, const std::vector<std::vector<CycNum>>& q_upper,
              unsigned long order, std::vector<int> heights) {
  GrData gr;
  gr.group = FiniteAbelianGroup{{}};
  gr.order = order;
  int r = static_cast<int>(trunc.size());
  for (int i = 0; i < r; ++i) {
    GrGenerator g;
    g.root = Root{std::vector<int>(static_cast<size_t>(r), 0)};
    g.root.coords[static_cast<size_t>(i)] = 1;
    g.label = "a" + std::to_string(i + 1);
    g.g = GroupElement{{}};
    g.chi = Character{{}};
    g.N = trunc[static_cast<size_t>(i)];
    g.M = 1;
    g.height = heights.empty() ? 1 : heights[static_cast<size_t>(i)];
    gr.gens.push_back(std::move(g));
  }
  gr.q.assign(static_cast<size_t>(r), std::vector<CycNum>(static_cast<size_t>(r), CycNum::one()));
  gr.qexp.assign(static_cast<size_t>(r), std::vector<long>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      long e = -1;
      for (long k = 0; k < static_cast<long>(order); ++k) {
        if (CycNum::root_of_unity(order, k) == q_upper[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
          e = k;
          break;
        }
      }
      if (e < 0) throw std::invalid_argument("gr_raw: q entry is not a power of zeta_order");
      gr.qexp[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
      gr.q[static_cast<size_t>(i)][static_cast<size_t>(j)] = CycNum::root_of_unity(order, e);
      gr.qexp[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          (static_cast<long>(order) - e) % static_cast<long>(order);
      gr.q[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          CycNum::root_of_unity(order, gr.qexp[static_cast<size_t>(j)][static_cast<size_t>(i)]);
    }
  }
  return gr;
}

int CohMonomial::degree() const {
  int d = 0;
  for (unsigned v : b) d += 2 * static_cast<int>(v);
  for (unsigned char v : c) d += v;
  return d;
}

std::string CohMonomial::str(const GrData& gr) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    if (!first) os << "*";
    os << "xi[" << gr.gens[i].label << "]";
    if (b[i] > 1) os << "^" << b[i];
    first = false;
  }
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    if (!first) os << "*";
    os << "eta[" << gr.gens[i].label << "]";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

void CohClass::add_term(const CohMonomial& m, const CycNum& v) {
  if (v.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CohClass CohClass::operator+(const CohClass& o) const {
  CohClass r = *this;
  for (const auto& [m, v] : o.terms_) r.add_term(m, v);
  return r;
}

CohClass CohClass::operator-(const CohClass& o) const {
  CohClass r = *this;
  for (const auto& [m, v] : o.terms_) r.add_term(m, -v);
  return r;
}

CohClass CohClass::scaled(const CycNum& s) const {
  CohClass r;
  if (s.is_zero()) return r;
  for (const auto& [m, v] : terms_) {
    CycNum w = v * s;
    if (!w.is_zero()) r.terms_.emplace(m, w);
  }
  return r;
}

bool CohClass::operator==(const CohClass& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, v] : terms_) {
    if (!(it->first == m) || it->second != v) return false;
    ++it;
  }
  return true;
}

CohClass CohClass::monomial(const CohMonomial& m) {
  CohClass c;
  c.add_term(m, CycNum::one());
  return c;
}

CohomologyRing::CohomologyRing(GrData gr, int verify_degree)
    : gr_(std::move(gr)), S_(s_presentation(gr_)), res_(S_) {
  // Chain-map property d f = f d, verified on construction.
  for (int i = 0; i < gr_.rank(); ++i) {
    for (int n = 1; n <= verify_degree; ++n) {
      for (const ResGenerator& a : res_.generators_of_degree(n)) {
        ResElement phi = res_.generator(a);
        if (res_.differential(apply_xi(i, phi)) != apply_xi(i, res_.differential(phi)))
          throw std::logic_error("xi chain map does not commute with d");
        if (res_.differential(apply_eta(i, phi)) != apply_eta(i, res_.differential(phi)))
          throw std::logic_error("eta chain map does not commute with d");
      }
    }
  }
}

ResElement CohomologyRing::apply_xi(int i, const ResElement& e) const {
  ResElement out;
  int r = gr_.rank();
  for (const auto& [a, coef] : e.terms()) {
    if (a[static_cast<size_t>(i)] < 2) continue;
    CycNum scalar = CycNum::one();
    for (int l = i + 1; l < r; ++l) {
      unsigned long tl = res_tau(gr_.gens[static_cast<size_t>(l)].N, a[static_cast<size_t>(l)]);
      if (tl != 0)
        scalar *= gr_.q[static_cast<size_t>(i)][static_cast<size_t>(l)].pow(
            static_cast<long>(gr_.gens[static_cast<size_t>(i)].N * tl));
    }
    ResGenerator b = a;
    b[static_cast<size_t>(i)] -= 2;
    out.add(b, coef.scaled(scalar));
  }
  return out;
}

ResElement CohomologyRing::apply_eta(int i, const ResElement& e) const {
  ResElement out;
  int r = gr_.rank();
  for (const auto& [a, coef] : e.terms()) {
    if (a[static_cast<size_t>(i)] < 1) continue;
    unsigned long Ni = gr_.gens[static_cast<size_t>(i)].N;
    unsigned long si = res_sigma(Ni, a[static_cast<size_t>(i)]);
    CycNum scalar = CycNum::one();
    for (int l = 0; l < i; ++l) {
      unsigned long tl = res_tau(gr_.gens[static_cast<size_t>(l)].N, a[static_cast<size_t>(l)]);
      if (tl != 0 && si > 1)
        scalar *= gr_.q[static_cast<size_t>(l)][static_cast<size_t>(i)].pow(
            static_cast<long>((si - 1) * tl));
    }
    for (int l = i + 1; l < r; ++l) {
      if (a[static_cast<size_t>(l)] % 2 == 1) scalar = -scalar;
      unsigned long tl = res_tau(gr_.gens[static_cast<size_t>(l)].N, a[static_cast<size_t>(l)]);
      if (tl != 0)
        scalar *= gr_.q[static_cast<size_t>(i)][static_cast<size_t>(l)].pow(static_cast<long>(tl));
    }
    std::vector<unsigned> xs(static_cast<size_t>(r), 0);
    xs[static_cast<size_t>(i)] = static_cast<unsigned>(si - 1);
    ResGenerator b = a;
    b[static_cast<size_t>(i)] -= 1;
    out.add(b, S_.multiply(coef, S_.monomial(xs).scaled(scalar)));
  }
  return out;
}

ResElement CohomologyRing::apply_monomial(const CohMonomial& m, const ResElement& e) const {
  ResElement cur = e;
  int r = gr_.rank();
  // xi_1^{b_1} ... xi_r^{b_r} eta_1^{c_1} ... eta_r^{c_r}: rightmost first.
  for (int i = r - 1; i >= 0; --i)
    if (m.c[static_cast<size_t>(i)]) cur = apply_eta(i, cur);
  for (int i = r - 1; i >= 0; --i)
    for (unsigned k = 0; k < m.b[static_cast<size_t>(i)]; ++k) cur = apply_xi(i, cur);
  return cur;
}

unsigned long CohomologyRing::dim_H(int theta, int n) {
  unsigned long num = 1;
  for (int k = 1; k < theta; ++k) num = num * static_cast<unsigned long>(n + k) /
                                        static_cast<unsigned long>(k);
  return theta == 0 ? (n == 0 ? 1 : 0) : num;
}

std::vector<CohMonomial> CohomologyRing::basis(int degree) const {
  std::vector<CohMonomial> out;
  int r = gr_.rank();
  CohMonomial cur;
  cur.b.assign(static_cast<size_t>(r), 0);
  cur.c.assign(static_cast<size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int bi = 0; 2 * bi <= left; ++bi) {
      for (int ci = 0; ci <= 1 && 2 * bi + ci <= left; ++ci) {
        cur.b[static_cast<size_t>(i)] = static_cast<unsigned>(bi);
        cur.c[static_cast<size_t>(i)] = static_cast<unsigned char>(ci);
        rec(i + 1, left - 2 * bi - ci);
      }
    }
    cur.b[static_cast<size_t>(i)] = 0;
    cur.c[static_cast<size_t>(i)] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Single-track evaluation of a composed monomial chain map on one generator:
// everything stays (sign, power of zeta_L, coefficient monomial, generator),
// so products of basis monomials run on integer exponent arithmetic.
struct FastTrack {
  std::vector<unsigned> a;  // generator multidegree
  std::vector<unsigned> x;  // coefficient monomial exponents
  long qe = 0;              // exponent of zeta_L
  int sign = 1;
  bool dead = false;
};

void fast_xi(const GrData& gr, int i, FastTrack& t) {
  if (t.dead) return;
  if (t.a[static_cast<size_t>(i)] < 2) {
    t.dead = true;
    return;
  }
  long L = static_cast<long>(gr.order);
  for (int l = i + 1; l < gr.rank(); ++l) {
    long tl = static_cast<long>(res_tau(gr.gens[static_cast<size_t>(l)].N,
                                        t.a[static_cast<size_t>(l)]));
    t.qe = (t.qe + static_cast<long>(gr.gens[static_cast<size_t>(i)].N % gr.order) * tl %
                       L * gr.qexp[static_cast<size_t>(i)][static_cast<size_t>(l)]) %
           L;
  }
  t.a[static_cast<size_t>(i)] -= 2;
}

void fast_eta(const GrData& gr, int i, FastTrack& t) {
  if (t.dead) return;
  if (t.a[static_cast<size_t>(i)] < 1) {
    t.dead = true;
    return;
  }
  long L = static_cast<long>(gr.order);
  unsigned long Ni = gr.gens[static_cast<size_t>(i)].N;
  long si = static_cast<long>(res_sigma(Ni, t.a[static_cast<size_t>(i)]));
  for (int l = 0; l < i; ++l) {
    long tl = static_cast<long>(res_tau(gr.gens[static_cast<size_t>(l)].N,
                                        t.a[static_cast<size_t>(l)]));
    t.qe = (t.qe + (si - 1) % L * tl % L *
                       gr.qexp[static_cast<size_t>(l)][static_cast<size_t>(i)]) %
           L;
  }
  for (int l = i + 1; l < gr.rank(); ++l) {
    if (t.a[static_cast<size_t>(l)] % 2 == 1) t.sign = -t.sign;
    long tl = static_cast<long>(res_tau(gr.gens[static_cast<size_t>(l)].N,
                                        t.a[static_cast<size_t>(l)]));
    t.qe = (t.qe + tl % L * gr.qexp[static_cast<size_t>(i)][static_cast<size_t>(l)]) % L;
  }
  // coefficient *= x_i^{si-1}, straightened into PBW position
  unsigned p = static_cast<unsigned>(si - 1);
  if (p > 0) {
    for (int m = i + 1; m < gr.rank(); ++m) {
      long em = static_cast<long>(t.x[static_cast<size_t>(m)]);
      if (em != 0)
        t.qe = (t.qe - static_cast<long>(p) * em % L *
                           gr.qexp[static_cast<size_t>(i)][static_cast<size_t>(m)]) %
               L;
    }
    t.x[static_cast<size_t>(i)] += p;
    if (t.x[static_cast<size_t>(i)] >= Ni) {
      t.dead = true;
      return;
    }
  }
  t.a[static_cast<size_t>(i)] -= 1;
}

void fast_monomial(const GrData& gr, const CohMonomial& m, FastTrack& t) {
  for (int i = gr.rank() - 1; i >= 0 && !t.dead; --i)
    if (m.c[static_cast<size_t>(i)]) fast_eta(gr, i, t);
  for (int i = gr.rank() - 1; i >= 0 && !t.dead; --i)
    for (unsigned k = 0; k < m.b[static_cast<size_t>(i)] && !t.dead; ++k) fast_xi(gr, i, t);
}

CycNum fast_value(const GrData& gr, const FastTrack& t) {
  if (t.dead) return CycNum::zero();
  for (unsigned v : t.a)
    if (v != 0) return CycNum::zero();
  for (unsigned v : t.x)
    if (v != 0) return CycNum::zero();  // eps kills nonunit coefficients
  long e = ((t.qe % static_cast<long>(gr.order)) + static_cast<long>(gr.order)) %
           static_cast<long>(gr.order);
  CycNum val = CycNum::root_of_unity(gr.order, e);
  return t.sign < 0 ? -val : val;
}

}  // namespace

std::optional<std::pair<CohMonomial, CycNum>> CohomologyRing::monomial_product(
    const CohMonomial& u, const CohMonomial& v) const {
  int r = gr_.rank();
  // Each xi_i / eta_i factor lowers slot i by exactly 2 / 1 and no other
  // slot, so the composite can only be nonzero on the one generator whose
  // slots match the combined drops.
  CohMonomial target;
  target.b.assign(static_cast<size_t>(r), 0);
  target.c.assign(static_cast<size_t>(r), 0);
  FastTrack t;
  t.a.assign(static_cast<size_t>(r), 0);
  t.x.assign(static_cast<size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    unsigned drop = 2 * (u.b[static_cast<size_t>(i)] + v.b[static_cast<size_t>(i)]) +
                    u.c[static_cast<size_t>(i)] + v.c[static_cast<size_t>(i)];
    t.a[static_cast<size_t>(i)] = drop;
    target.b[static_cast<size_t>(i)] = drop / 2;
    target.c[static_cast<size_t>(i)] = static_cast<unsigned char>(drop % 2);
  }
  fast_monomial(gr_, v, t);
  fast_monomial(gr_, u, t);
  CycNum val = fast_value(gr_, t);
  if (val.is_zero()) return std::nullopt;
  return std::make_pair(target, val / normalizer(target));
}

CycNum CohomologyRing::normalizer(const CohMonomial& m) const {
  int r = gr_.rank();
  FastTrack t;
  t.a.assign(static_cast<size_t>(r), 0);
  t.x.assign(static_cast<size_t>(r), 0);
  for (int i = 0; i < r; ++i)
    t.a[static_cast<size_t>(i)] =
        2 * m.b[static_cast<size_t>(i)] + m.c[static_cast<size_t>(i)];
  fast_monomial(gr_, m, t);
  CycNum val = fast_value(gr_, t);
  if (val.is_zero()) throw std::logic_error("basis monomial has zero normalizer");
  return val;
}

CohClass CohomologyRing::product(const CohClass& u, const CohClass& v) const {
  CohClass out;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      auto res = monomial_product(mu, mv);
      if (!res) continue;
      out.add_term(res->first, cu * cv * res->second);
    }
  }
  return out;
}

Character CohomologyRing::monomial_character(const CohMonomial& m) const {
  Character chi = char_reduce(gr_.group, std::vector<long>(gr_.group.rank(), 0));
  for (int i = 0; i < gr_.rank(); ++i) {
    long w = static_cast<long>(gr_.gens[static_cast<size_t>(i)].N) *
                 static_cast<long>(m.b[static_cast<size_t>(i)]) +
             m.c[static_cast<size_t>(i)];
    if (w != 0) chi = char_mul(gr_.group, chi, char_pow(gr_.group, gr_.gens[static_cast<size_t>(i)].chi, w));
  }
  return chi;
}

CohClass CohomologyRing::gamma_on_class(const GroupElement& g, const CohClass& u) const {
  CohClass out;
  for (const auto& [m, v] : u.terms()) {
    CycNum scalar = char_value(gr_.group, monomial_character(m), g).inverse();
    out.add_term(m, v * scalar);
  }
  return out;
}

bool CohomologyRing::is_invariant(const CohMonomial& m) const {
  return is_trivial(monomial_character(m));
}

std::vector<CohMonomial> CohomologyRing::invariant_basis(int degree_max) const {
  std::vector<CohMonomial> out;
  for (int n = 0; n <= degree_max; ++n)
    for (const CohMonomial& m : basis(n))
      if (is_invariant(m)) out.push_back(m);
  return out;
}

std::optional<CohMonomial> CohomologyRing::odd_invariant_witness() const {
  int r = gr_.rank();
  if (r >= 30) throw std::domain_error("odd_invariant_witness: rank too large");
  // Period of b_i in the congruence: the order of chi_i^{N_i} in the dual
  // group; scanning the full period box decides existence exactly.
  std::vector<unsigned long> period(static_cast<size_t>(r));
  unsigned long long box = 1;
  for (int i = 0; i < r; ++i) {
    period[static_cast<size_t>(i)] = char_order(
        gr_.group, char_pow(gr_.group, gr_.gens[static_cast<size_t>(i)].chi,
                            static_cast<long>(gr_.gens[static_cast<size_t>(i)].N)));
    box *= period[static_cast<size_t>(i)];
    if (box > 20000000ull)
      throw std::domain_error("odd_invariant_witness: congruence box too large");
  }
  std::optional<CohMonomial> best;
  for (unsigned long long cbits = 1; cbits < (1ull << r); ++cbits) {
    if (__builtin_popcountll(cbits) % 2 == 0) continue;
    CohMonomial m;
    m.b.assign(static_cast<size_t>(r), 0);
    m.c.assign(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i)
      m.c[static_cast<size_t>(i)] = static_cast<unsigned char>((cbits >> i) & 1);
    std::vector<unsigned> b(static_cast<size_t>(r), 0);
    while (true) {
      m.b = b;
      if (is_invariant(m)) {
        if (!best || m.degree() < best->degree() ||
            (m.degree() == best->degree() && m < *best))
          best = m;
      }
      int i = 0;
      for (; i < r; ++i) {
        if (++b[static_cast<size_t>(i)] < period[static_cast<size_t>(i)]) break;
        b[static_cast<size_t>(i)] = 0;
      }
      if (i == r) break;
    }
  }
  return best;
}

FingenWitness CohomologyRing::fingen_witness() const {
  int r = gr_.rank();
  FingenWitness w;
  unsigned long msum = 0;
  for (int i = 0; i < r; ++i) {
    w.algebra_generators.emplace_back(i, gr_.gens[static_cast<size_t>(i)].M);
    msum += gr_.gens[static_cast<size_t>(i)].M;
  }
  w.span_degree_cap = static_cast<int>(2 * msum) + r;

  // module generators: xi^b eta^c with 0 <= b_i < M_i, c in {0,1}^r
  std::vector<unsigned> b(static_cast<size_t>(r), 0);
  while (true) {
    for (unsigned long long cbits = 0; cbits < (1ull << r); ++cbits) {
      CohMonomial m;
      m.b = b;
      m.c.assign(static_cast<size_t>(r), 0);
      for (int i = 0; i < r; ++i)
        m.c[static_cast<size_t>(i)] = static_cast<unsigned char>((cbits >> i) & 1);
      w.module_generators.push_back(m);
    }
    int i = 0;
    for (; i < r; ++i) {
      if (++b[static_cast<size_t>(i)] < gr_.gens[static_cast<size_t>(i)].M) break;
      b[static_cast<size_t>(i)] = 0;
    }
    if (i == r) break;
  }
  std::sort(w.module_generators.begin(), w.module_generators.end());

  // Span check: every basis monomial of degree <= cap is (A-generator
  // product) * (module generator) with a nonzero scalar; the products are
  // diagonal in the monomial basis, so this is a full-rank triangular system.
  w.span_verified = true;
  for (int n = 0; n <= w.span_degree_cap && w.span_verified; ++n) {
    for (const CohMonomial& target : basis(n)) {
      CohMonomial apart, mpart;
      apart.b.assign(static_cast<size_t>(r), 0);
      apart.c.assign(static_cast<size_t>(r), 0);
      mpart.b.assign(static_cast<size_t>(r), 0);
      mpart.c = target.c;
      for (int i = 0; i < r; ++i) {
        unsigned long Mi = gr_.gens[static_cast<size_t>(i)].M;
        apart.b[static_cast<size_t>(i)] =
            static_cast<unsigned>((target.b[static_cast<size_t>(i)] / Mi) * Mi);
        mpart.b[static_cast<size_t>(i)] =
            static_cast<unsigned>(target.b[static_cast<size_t>(i)] % Mi);
      }
      auto res = monomial_product(apart, mpart);
      if (!res || !(res->first == target) || res->second.is_zero()) {
        w.span_verified = false;
        w.detail = "span verification failed in degree " + std::to_string(n);
        break;
      }
    }
  }
  return w;
}

CohClass CohomologyRing::monomial_class(int xi_index, int eta_index) const {
  CohMonomial m;
  m.b.assign(static_cast<size_t>(gr_.rank()), 0);
  m.c.assign(static_cast<size_t>(gr_.rank()), 0);
  if (xi_index >= 0) m.b[static_cast<size_t>(xi_index)] = 1;
  if (eta_index >= 0) m.c[static_cast<size_t>(eta_index)] = 1;
  return CohClass::monomial(m);
}

bool verify_ring_relations(const CohomologyRing& H, int degree_cap, std::string* detail) {
  const GrData& gr = H.data();
  const Resolution& res = H.resolution();
  int r = gr.rank();
  for (int n = 0; n <= degree_cap; ++n) {
    for (const ResGenerator& a : res.generators_of_degree(n)) {
      ResElement phi = res.generator(a);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          if (i == j) continue;
          unsigned long Ni = gr.gens[static_cast<size_t>(i)].N;
          unsigned long Nj = gr.gens[static_cast<size_t>(j)].N;
          const CycNum& qji = gr.q[static_cast<size_t>(j)][static_cast<size_t>(i)];
          ResElement lhs = H.apply_xi(i, H.apply_xi(j, phi));
          ResElement rhs =
              H.apply_xi(j, H.apply_xi(i, phi)).scaled(qji.pow(static_cast<long>(Ni * Nj)));
          if (lhs != rhs) {
            if (detail) *detail = "xi-xi relation fails";
            return false;
          }
          lhs = H.apply_eta(i, H.apply_xi(j, phi));
          rhs = H.apply_xi(j, H.apply_eta(i, phi)).scaled(qji.pow(static_cast<long>(Nj)));
          if (lhs != rhs) {
            if (detail) *detail = "eta-xi relation fails";
            return false;
          }
          lhs = H.apply_eta(i, H.apply_eta(j, phi));
          rhs = H.apply_eta(j, H.apply_eta(i, phi)).scaled(-qji);
          if (lhs != rhs) {
            if (detail) *detail = "eta-eta relation fails";
            return false;
          }
        }
      }
    }
  }
  for (int i = 0; i < r; ++i) {
    CohClass eta = H.monomial_class(-1, i);
    CohClass sq = H.product(eta, eta);
    if (gr.gens[static_cast<size_t>(i)].N == 2) {
      if (!(sq == H.monomial_class(i, -1))) {
        if (detail) *detail = "eta^2 != xi at N = 2";
        return false;
      }
    } else if (!sq.is_zero()) {
      if (detail) *detail = "eta^2 != 0 at N >= 3";
      return false;
    }
  }
  return true;
}

std::vector<unsigned long> CohomologyRing::hilbert_series(int degree_max, bool invariant) const {
  std::vector<unsigned long> dims;
  for (int n = 0; n <= degree_max; ++n) {
    if (!invariant) {
      dims.push_back(dim_H(n));
    } else {
      unsigned long count = 0;
      for (const CohMonomial& m : basis(n))
        if (is_invariant(m)) ++count;
      dims.push_back(count);
    }
  }
  return dims;
}

}  // namespace hopfcoh
