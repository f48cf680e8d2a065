#include "hopfcoh/bar_ext.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace hopfcoh {

AugmentedBasis::AugmentedBasis(AlgebraPresentation pres) : p_(std::move(pres)) {
  const AlgebraPresentation& p = p_;
  if (!p.truncated())
    throw std::invalid_argument("AugmentedBasis: finite-dimensional algebra required");
  std::vector<GroupElement> gelems;
  if (p.group())
    gelems = all_elements(*p.group());
  else
    gelems.push_back(GroupElement{});
  for (const auto& exps : p.monomial_basis()) {
    bool unit_exps = std::all_of(exps.begin(), exps.end(), [](unsigned v) { return v == 0; });
    if (unit_exps) continue;
    for (const auto& g : gelems) {
      PBWKey k{exps, p.group() ? g.exps : std::vector<long>{}};
      index_[k] = static_cast<int>(elems_.size());
      keys_.push_back(k);
      PBWElement e;
      e.add_term(k, CycNum::one());
      elems_.push_back(e);
    }
  }
  first_group_ = static_cast<int>(elems_.size());
  if (p.group()) {
    for (const auto& g : gelems) {
      if (is_identity(g)) continue;
      group_index_[g.exps] = static_cast<int>(elems_.size());
      PBWKey k{std::vector<unsigned>(p.ngens(), 0), g.exps};
      keys_.push_back(k);
      PBWElement e;
      e.add_term(k, CycNum::one());
      PBWKey unit{std::vector<unsigned>(p.ngens(), 0), std::vector<long>(p.group()->rank(), 0)};
      e.add_term(unit, -CycNum::one());
      elems_.push_back(e);
    }
  }
}

std::string AugmentedBasis::describe(int idx) const {
  return to_string(p_, elems_[static_cast<size_t>(idx)]);
}

long AugmentedBasis::internal_degree(int idx) const {
  if (is_group_minus_one(idx)) return 0;
  const PBWKey& k = keys_[static_cast<size_t>(idx)];
  long d = 0;
  for (int i = 0; i < p_.ngens(); ++i)
    d += static_cast<long>(k.exps[static_cast<size_t>(i)]) * p_.gen_height(i);
  return d;
}

AugmentedBasis::Expansion AugmentedBasis::expand(const PBWElement& e) const {
  Expansion out;
  out.unit = CycNum::zero();
  std::map<int, CycNum> acc;
  for (const auto& [k, c] : e.terms()) {
    bool unit_exps = std::all_of(k.exps.begin(), k.exps.end(), [](unsigned v) { return v == 0; });
    if (!unit_exps) {
      acc[index_.at(k)] += c;
    } else {
      bool ident = std::all_of(k.grp.begin(), k.grp.end(), [](long v) { return v == 0; });
      if (ident) {
        out.unit += c;
      } else {
        acc[group_index_.at(k.grp)] += c;  // g = (g - 1) + 1
        out.unit += c;
      }
    }
  }
  for (const auto& [i, c] : acc)
    if (!c.is_zero()) out.terms.emplace_back(i, c);
  return out;
}

const AugmentedBasis::Expansion& AugmentedBasis::product(int i, int j) const {
  auto it = cache_.find({i, j});
  if (it != cache_.end()) return it->second;
  PBWElement prod = p_.multiply(elems_[static_cast<size_t>(i)], elems_[static_cast<size_t>(j)]);
  return cache_.emplace(std::make_pair(i, j), expand(prod)).first->second;
}

Cochain Cochain::from_values(int arity, std::map<std::vector<int>, CycNum> values) {
  auto store = std::make_shared<std::map<std::vector<int>, CycNum>>(std::move(values));
  return Cochain(arity, [store](const std::vector<int>& t) {
    auto it = store->find(t);
    return it == store->end() ? CycNum::zero() : it->second;
  });
}

Cochain bar_differential(const AugmentedBasis& A, const Cochain& f) {
  int n = f.arity();
  return Cochain(n + 1, [&A, f, n](const std::vector<int>& t) {
    CycNum acc = CycNum::zero();
    std::vector<int> merged(static_cast<size_t>(n));
    for (int i = 0; i + 1 <= n; ++i) {
      const auto& exp = A.product(t[static_cast<size_t>(i)], t[static_cast<size_t>(i) + 1]);
      if (exp.terms.empty()) continue;
      for (int s = 0; s < i; ++s) merged[static_cast<size_t>(s)] = t[static_cast<size_t>(s)];
      for (int s = i + 1; s < n; ++s)
        merged[static_cast<size_t>(s)] = t[static_cast<size_t>(s) + 1];
      CycNum part = CycNum::zero();
      for (const auto& [idx, c] : exp.terms) {
        merged[static_cast<size_t>(i)] = idx;
        CycNum fv = f(merged);
        if (!fv.is_zero()) part += c * fv;
      }
      if (i % 2 == 0) part = -part;  // sign (-1)^{i+1}
      acc += part;
    }
    return acc;
  });
}

CocycleReport check_cocycle(const AugmentedBasis& A, const Cochain& f, bool exhaustive,
                            long long samples, unsigned long seed) {
  Cochain df = bar_differential(A, f);
  int m = df.arity();
  int D = A.size();
  CocycleReport rep;
  rep.exhaustive = exhaustive;
  auto record = [&](const std::vector<int>& t) {
    rep.pass = false;
    if (rep.violations.size() < 5) {
      std::ostringstream os;
      for (size_t s = 0; s < t.size(); ++s)
        os << (s ? " (x) " : "") << A.describe(t[s]);
      rep.violations.push_back(os.str());
    }
  };
  if (exhaustive) {
    std::vector<int> t(static_cast<size_t>(m), 0);
    while (true) {
      if (!df(t).is_zero()) record(t);
      ++rep.checked;
      int i = 0;
      for (; i < m; ++i) {
        if (++t[static_cast<size_t>(i)] < D) break;
        t[static_cast<size_t>(i)] = 0;
      }
      if (i == m) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, D - 1);
    std::vector<int> t(static_cast<size_t>(m));
    for (long long s = 0; s < samples; ++s) {
      for (int i = 0; i < m; ++i) t[static_cast<size_t>(i)] = pick(rng);
      if (!df(t).is_zero()) record(t);
      ++rep.checked;
    }
  }
  return rep;
}

namespace {

// Markowitz-style exact sparse elimination. Rows are sorted sparse vectors.
template <class Scalar, class Ops>
unsigned long rank_impl(std::vector<std::vector<std::pair<int, Scalar>>>& rows, const Ops& ops) {
  int nrows = static_cast<int>(rows.size());
  std::map<int, std::set<int>> col_rows;  // column -> active rows containing it
  for (int r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[static_cast<size_t>(r)]) {
      (void)v;
      col_rows[c].insert(r);
    }
  auto row_sub = [&](int r, int piv, const Scalar& factor, int pivot_col) {
    // rows[r] -= factor * rows[piv]
    const auto& prow = rows[static_cast<size_t>(piv)];
    auto& row = rows[static_cast<size_t>(r)];
    std::vector<std::pair<int, Scalar>> out;
    out.reserve(row.size() + prow.size());
    size_t a = 0, b = 0;
    while (a < row.size() || b < prow.size()) {
      if (b == prow.size() || (a < row.size() && row[a].first < prow[b].first)) {
        out.push_back(row[a++]);
      } else if (a == row.size() || prow[b].first < row[a].first) {
        Scalar v = ops.neg(ops.mul(factor, prow[b].second));
        if (!ops.is_zero(v)) {
          col_rows[prow[b].first].insert(r);
          out.emplace_back(prow[b].first, v);
        }
        ++b;
      } else {
        Scalar v = ops.sub(row[a].second, ops.mul(factor, prow[b].second));
        if (ops.is_zero(v)) {
          if (row[a].first != pivot_col) col_rows[row[a].first].erase(r);
        } else {
          out.emplace_back(row[a].first, v);
        }
        ++a;
        ++b;
      }
    }
    row = std::move(out);
  };

  unsigned long rank = 0;
  while (!col_rows.empty()) {
    // pivot column: fewest active rows; pivot row within it: fewest entries
    int best_col = -1;
    size_t best_count = 0;
    for (const auto& [c, rs] : col_rows) {
      if (rs.empty()) continue;
      if (best_col == -1 || rs.size() < best_count) {
        best_col = c;
        best_count = rs.size();
        if (best_count == 1) break;
      }
    }
    if (best_col == -1) break;
    std::set<int> rows_here = col_rows[best_col];
    int piv = -1;
    size_t piv_len = 0;
    for (int r : rows_here) {
      size_t len = rows[static_cast<size_t>(r)].size();
      if (piv == -1 || len < piv_len) {
        piv = r;
        piv_len = len;
      }
    }
    Scalar pval{};
    for (const auto& [c, v] : rows[static_cast<size_t>(piv)])
      if (c == best_col) pval = v;
    for (int r : rows_here) {
      if (r == piv) continue;
      Scalar rval{};
      for (const auto& [c, v] : rows[static_cast<size_t>(r)])
        if (c == best_col) rval = v;
      row_sub(r, piv, ops.div(rval, pval), best_col);
      col_rows[best_col].erase(r);
    }
    // retire the pivot row and column
    for (const auto& [c, v] : rows[static_cast<size_t>(piv)]) {
      (void)v;
      col_rows[c].erase(piv);
      if (col_rows[c].empty()) col_rows.erase(c);
    }
    rows[static_cast<size_t>(piv)].clear();
    col_rows.erase(best_col);
    ++rank;
  }
  return rank;
}

struct CycOps {
  CycNum neg(const CycNum& a) const { return -a; }
  CycNum sub(const CycNum& a, const CycNum& b) const { return a - b; }
  CycNum mul(const CycNum& a, const CycNum& b) const { return a * b; }
  CycNum div(const CycNum& a, const CycNum& b) const { return a / b; }
  bool is_zero(const CycNum& a) const { return a.is_zero(); }
};

struct FpOps {
  unsigned long p;
  unsigned long neg(unsigned long a) const { return a == 0 ? 0 : p - a; }
  unsigned long sub(unsigned long a, unsigned long b) const { return (a + p - b) % p; }
  unsigned long mul(unsigned long a, unsigned long b) const {
    return static_cast<unsigned long>((static_cast<unsigned long long>(a) * b) % p);
  }
  unsigned long inv(unsigned long a) const {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    return static_cast<unsigned long>(((t % static_cast<long long>(p)) +
                                       static_cast<long long>(p)) %
                                      static_cast<long long>(p));
  }
  unsigned long div(unsigned long a, unsigned long b) const { return mul(a, inv(b)); }
  bool is_zero(unsigned long a) const { return a == 0; }
};

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FpEmbedding {
  unsigned long p;
  std::vector<unsigned long> zeta_powers;  // zeta_L^i mod p
};

// A prime p = 1 (mod L) and an element of exact multiplicative order L.
std::optional<FpEmbedding> make_embedding(unsigned long L, unsigned long skip) {
  unsigned long p = (1u << 30) / L * L + 1;
  unsigned long skipped = 0;
  for (; p < (1ull << 31); p += L) {
    if (!is_prime(p)) continue;
    if (skipped++ < skip) continue;
    FpOps ops{p};
    std::vector<unsigned long> prime_divs;
    unsigned long m = L;
    for (unsigned long q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        prime_divs.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) prime_divs.push_back(m);
    for (unsigned long a = 2; a < p; ++a) {
      unsigned long w = 1, base = a % p, e = (p - 1) / L;
      for (unsigned long k = e; k; k >>= 1, base = ops.mul(base, base))
        if (k & 1) w = ops.mul(w, base);
      bool ok = w != 1 || L == 1;
      for (unsigned long q : prime_divs) {
        unsigned long t = 1, b2 = w, k = L / q;
        for (; k; k >>= 1, b2 = ops.mul(b2, b2))
          if (k & 1) t = ops.mul(t, b2);
        if (t == 1) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      FpEmbedding emb{p, {}};
      emb.zeta_powers.resize(L == 0 ? 1 : L);
      unsigned long cur = 1;
      for (unsigned long i = 0; i < std::max(1ul, L); ++i) {
        emb.zeta_powers[i] = cur;
        cur = ops.mul(cur, w);
      }
      return emb;
    }
  }
  return std::nullopt;
}

std::optional<unsigned long> to_fp(const CycNum& v, const FpEmbedding& emb) {
  FpOps ops{emb.p};
  CycNum lifted = v.lifted(std::lcm(v.order(), static_cast<unsigned long>(emb.zeta_powers.size())));
  if (lifted.order() != emb.zeta_powers.size()) return std::nullopt;
  unsigned long acc = 0;
  for (size_t i = 0; i < lifted.coeffs().size(); ++i) {
    const Rational& c = lifted.coeffs()[i];
    mpz_class num = c.get_num() % static_cast<long>(emb.p);
    mpz_class den = c.get_den() % static_cast<long>(emb.p);
    if (den == 0) return std::nullopt;
    long numl = num.get_si(), denl = den.get_si();
    unsigned long nm = static_cast<unsigned long>((numl % static_cast<long>(emb.p) +
                                                   static_cast<long>(emb.p)) %
                                                  static_cast<long>(emb.p));
    unsigned long dn = static_cast<unsigned long>((denl % static_cast<long>(emb.p) +
                                                   static_cast<long>(emb.p)) %
                                                  static_cast<long>(emb.p));
    acc = (acc + ops.mul(ops.div(nm, dn), emb.zeta_powers[i % emb.zeta_powers.size()])) % emb.p;
  }
  return acc;
}

// Rows of the chain-level map (A+)^{(x)m} -> (A+)^{(x)(m-1)} whose transpose
// is the reduced-bar differential; rank equals the differential's rank.
class PartialMatrixBuilder {
 public:
  PartialMatrixBuilder(const AugmentedBasis& A, int m, unsigned long long budget)
      : A_(A), m_(m), budget_(budget) {}

  template <class Sink>
  void build(Sink&& sink) {
    if (m_ < 2) return;  // the m = 1 map is zero in the reduced complex
    int D = A_.size();
    std::vector<int> t(static_cast<size_t>(m_), 0);
    std::vector<int> merged(static_cast<size_t>(m_) - 1);
    unsigned long long entries = 0;
    while (true) {
      std::map<long long, CycNum> row;  // column id -> value
      for (int i = 0; i + 1 < m_; ++i) {
        const auto& exp = A_.product(t[static_cast<size_t>(i)], t[static_cast<size_t>(i) + 1]);
        if (!exp.terms.empty()) {
          for (int s = 0; s < i; ++s) merged[static_cast<size_t>(s)] = t[static_cast<size_t>(s)];
          for (int s = i + 1; s + 1 < m_; ++s)
            merged[static_cast<size_t>(s)] = t[static_cast<size_t>(s) + 1];
          for (const auto& [idx, c] : exp.terms) {
            merged[static_cast<size_t>(i)] = idx;
            long long col = 0;
            for (int s = 0; s + 1 < m_; ++s) col = col * D + merged[static_cast<size_t>(s)];
            CycNum signed_c = (i % 2 == 0) ? -c : c;
            auto it = row.find(col);
            if (it == row.end())
              row.emplace(col, signed_c);
            else {
              it->second += signed_c;
              if (it->second.is_zero()) row.erase(it);
            }
          }
        }
      }
      if (!row.empty()) {
        entries += row.size();
        if (entries > budget_)
          throw BudgetExceeded("bar-complex matrix exceeds the entry budget", entries);
        sink(row);
      }
      int i = 0;
      for (; i < m_; ++i) {
        if (++t[static_cast<size_t>(i)] < D) break;
        t[static_cast<size_t>(i)] = 0;
      }
      if (i == m_) break;
    }
  }

 private:
  const AugmentedBasis& A_;
  int m_;
  unsigned long long budget_;
};

unsigned long rank_partial(const AugmentedBasis& A, int m, const ExtOptions& opt,
                           unsigned long* prime_used) {
  if (m < 2) return 0;
  if (!opt.probabilistic) {
    std::vector<std::vector<std::pair<int, CycNum>>> rows;
    std::map<long long, int> colmap;
    PartialMatrixBuilder(A, m, opt.budget).build([&](const std::map<long long, CycNum>& row) {
      std::vector<std::pair<int, CycNum>> r;
      r.reserve(row.size());
      for (const auto& [col, v] : row) {
        auto it = colmap.emplace(col, static_cast<int>(colmap.size())).first;
        r.emplace_back(it->second, v);
      }
      std::sort(r.begin(), r.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(r));
    });
    return sparse_rank(std::move(rows));
  }
  unsigned long L = A.algebra().scalar_order();
  for (unsigned long skip = 0; skip < 5; ++skip) {
    auto emb = make_embedding(L, skip);
    if (!emb) break;
    bool failed = false;
    std::vector<std::vector<std::pair<int, unsigned long>>> rows;
    std::map<long long, int> colmap;
    try {
      PartialMatrixBuilder(A, m, opt.budget).build([&](const std::map<long long, CycNum>& row) {
        std::vector<std::pair<int, unsigned long>> r;
        for (const auto& [col, v] : row) {
          auto fv = to_fp(v, *emb);
          if (!fv) throw std::domain_error("embedding failed");
          if (*fv == 0) continue;
          auto it = colmap.emplace(col, static_cast<int>(colmap.size())).first;
          r.emplace_back(it->second, *fv);
        }
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!r.empty()) rows.push_back(std::move(r));
      });
    } catch (const std::domain_error&) {
      failed = true;
    }
    if (failed) continue;
    if (prime_used) *prime_used = emb->p;
    FpOps ops{emb->p};
    return rank_impl(rows, ops);
  }
  throw std::runtime_error("probabilistic rank: no usable prime found");
}

}  // namespace

unsigned long sparse_rank(std::vector<std::vector<std::pair<int, CycNum>>> rows) {
  CycOps ops;
  return rank_impl(rows, ops);
}

ExtResult ext_dim(const AugmentedBasis& A, int n, const ExtOptions& opt) {
  ExtResult res;
  res.probabilistic = opt.probabilistic;
  unsigned long long dim_n = 1;
  for (int i = 0; i < n; ++i) {
    dim_n *= static_cast<unsigned long long>(A.size());
    if (dim_n > (1ull << 62)) throw BudgetExceeded("tuple space too large", dim_n);
  }
  unsigned long prime = 0;
  unsigned long r_up = rank_partial(A, n + 1, opt, &prime);
  unsigned long r_dn = rank_partial(A, n, opt, &prime);
  res.dim = static_cast<unsigned long>(dim_n - r_up - r_dn);
  res.prime = prime;
  return res;
}

bool is_coboundary_graded(const AugmentedBasis& A, const Cochain& target, long internal_degree) {
  int n = target.arity() - 1;  // arity of the unknown h
  if (n < 1) throw std::invalid_argument("is_coboundary_graded: target arity must be >= 2");
  // enumerate tuples with the exact internal degree
  auto tuples_of_degree = [&](int len, long deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(len));
    std::function<void(int, long)> rec = [&](int pos, long left) {
      if (pos == len) {
        if (left == 0) out.push_back(cur);
        return;
      }
      for (int i = 0; i < A.size(); ++i) {
        long d = A.internal_degree(i);
        if (d > left) continue;
        cur[static_cast<size_t>(pos)] = i;
        rec(pos + 1, left - d);
      }
    };
    rec(0, deg);
    return out;
  };

  std::vector<std::vector<int>> hbasis = tuples_of_degree(n, internal_degree);
  std::map<std::vector<int>, int> hindex;
  for (const auto& t : hbasis) hindex.emplace(t, static_cast<int>(hindex.size()));

  std::vector<std::vector<std::pair<int, CycNum>>> rows_a;
  std::vector<std::vector<std::pair<int, CycNum>>> rows_ab;
  std::vector<int> merged(static_cast<size_t>(n));
  for (const auto& t : tuples_of_degree(n + 1, internal_degree)) {
    std::map<int, CycNum> row;
    for (int i = 0; i + 1 <= n; ++i) {
      const auto& exp = A.product(t[static_cast<size_t>(i)], t[static_cast<size_t>(i) + 1]);
      if (exp.terms.empty()) continue;
      for (int s = 0; s < i; ++s) merged[static_cast<size_t>(s)] = t[static_cast<size_t>(s)];
      for (int s = i + 1; s < n; ++s)
        merged[static_cast<size_t>(s)] = t[static_cast<size_t>(s) + 1];
      for (const auto& [idx, c] : exp.terms) {
        merged[static_cast<size_t>(i)] = idx;
        auto it = hindex.find(merged);
        if (it == hindex.end()) continue;  // degree mismatch cannot happen, but be safe
        CycNum v = (i % 2 == 0) ? -c : c;
        auto rit = row.find(it->second);
        if (rit == row.end())
          row.emplace(it->second, v);
        else {
          rit->second += v;
          if (rit->second.is_zero()) row.erase(rit);
        }
      }
    }
    CycNum tv = target(t);
    std::vector<std::pair<int, CycNum>> ra(row.begin(), row.end());
    rows_a.push_back(ra);
    if (!tv.is_zero()) ra.emplace_back(static_cast<int>(hbasis.size()), tv);
    rows_ab.push_back(std::move(ra));
  }
  return sparse_rank(std::move(rows_a)) == sparse_rank(std::move(rows_ab));
}

}  // namespace hopfcoh
