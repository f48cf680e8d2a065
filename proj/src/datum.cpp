#include "hopfcoh/datum.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfcoh {

unsigned long FiniteAbelianGroup::cyclotomic_order() const {
  unsigned long L = 1;
  for (long d : orders) {
    if (d < 1) throw std::invalid_argument("group invariant factor must be positive");
    L = std::lcm(L, static_cast<unsigned long>(d));
  }
  return L;
}

GroupElement group_identity(const FiniteAbelianGroup& G) {
  return GroupElement{std::vector<long>(G.rank(), 0)};
}

GroupElement group_reduce(const FiniteAbelianGroup& G, std::vector<long> exps) {
  if (exps.size() != G.rank()) throw std::invalid_argument("group element rank mismatch");
  for (size_t j = 0; j < exps.size(); ++j) {
    exps[j] %= G.orders[j];
    if (exps[j] < 0) exps[j] += G.orders[j];
  }
  return GroupElement{std::move(exps)};
}

GroupElement group_mul(const FiniteAbelianGroup& G, const GroupElement& a, const GroupElement& b) {
  std::vector<long> e(G.rank());
  for (size_t j = 0; j < e.size(); ++j) e[j] = a.exps[j] + b.exps[j];
  return group_reduce(G, std::move(e));
}

GroupElement group_pow(const FiniteAbelianGroup& G, const GroupElement& a, long n) {
  std::vector<long> e(G.rank());
  for (size_t j = 0; j < e.size(); ++j) e[j] = (a.exps[j] % G.orders[j]) * (n % G.orders[j]);
  return group_reduce(G, std::move(e));
}

bool is_identity(const GroupElement& g) {
  for (long e : g.exps)
    if (e != 0) return false;
  return true;
}

std::vector<GroupElement> all_elements(const FiniteAbelianGroup& G) {
  std::vector<GroupElement> out;
  GroupElement cur = group_identity(G);
  while (true) {
    out.push_back(cur);
    size_t j = 0;
    for (; j < G.rank(); ++j) {
      if (++cur.exps[j] < G.orders[j]) break;
      cur.exps[j] = 0;
    }
    if (j == G.rank()) break;
  }
  return out;
}

Character char_reduce(const FiniteAbelianGroup& G, std::vector<long> exps) {
  return Character{group_reduce(G, std::move(exps)).exps};
}

Character char_mul(const FiniteAbelianGroup& G, const Character& a, const Character& b) {
  std::vector<long> e(G.rank());
  for (size_t j = 0; j < e.size(); ++j) e[j] = a.exps[j] + b.exps[j];
  return char_reduce(G, std::move(e));
}

Character char_pow(const FiniteAbelianGroup& G, const Character& a, long n) {
  std::vector<long> e(G.rank());
  for (size_t j = 0; j < e.size(); ++j) e[j] = (a.exps[j] % G.orders[j]) * (n % G.orders[j]);
  return char_reduce(G, std::move(e));
}

bool is_trivial(const Character& chi) {
  for (long e : chi.exps)
    if (e != 0) return false;
  return true;
}

unsigned long char_order(const FiniteAbelianGroup& G, const Character& chi) {
  unsigned long n = 1;
  for (size_t j = 0; j < G.rank(); ++j) {
    unsigned long d = static_cast<unsigned long>(G.orders[j]);
    unsigned long e = static_cast<unsigned long>(((chi.exps[j] % G.orders[j]) + G.orders[j]) %
                                                 G.orders[j]);
    unsigned long ord = d / std::gcd(d, e == 0 ? d : e);
    n = std::lcm(n, e == 0 ? 1ul : ord);
  }
  return n;
}

CycNum char_value(const FiniteAbelianGroup& G, const Character& chi, const GroupElement& g) {
  unsigned long L = G.cyclotomic_order();
  long total = 0;
  for (size_t j = 0; j < G.rank(); ++j) {
    long d = G.orders[j];
    long contrib = static_cast<long>((L / static_cast<unsigned long>(d))) *
                   ((chi.exps[j] * g.exps[j]) % d);
    total = (total + contrib) % static_cast<long>(L);
  }
  return CycNum::root_of_unity(L, total);
}

unsigned long CartanDatum::working_order() const {
  unsigned long L = group.cyclotomic_order();
  if (q_order) L = std::lcm(L, *q_order);
  return L;
}

bool ValidationReport::ok() const {
  for (const auto& e : entries)
    if (e.status == ValidationEntry::Status::Fail) return false;
  return true;
}

bool ValidationReport::clean() const {
  for (const auto& e : entries)
    if (e.status != ValidationEntry::Status::Pass) return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& e : entries)
    if (e.status == ValidationEntry::Status::Fail) return e.name + ": " + e.detail;
  return {};
}

namespace {

void entry(ValidationReport& rep, ValidationEntry::Status st, std::string name,
           std::string detail) {
  rep.entries.push_back({st, std::move(name), std::move(detail)});
}

}  // namespace

ValidationReport validate(const CartanDatum& d) {
  ValidationReport rep;
  const auto& G = d.group;
  int theta = d.theta();
  d.cartan.check_well_formed();
  if (static_cast<int>(d.g.size()) != theta || static_cast<int>(d.chi.size()) != theta)
    throw std::invalid_argument("datum: g/chi length must equal the Cartan rank");
  for (const auto& g : d.g)
    if (g.exps.size() != G.rank()) throw std::invalid_argument("datum: group element rank");
  for (const auto& c : d.chi)
    if (c.exps.size() != G.rank()) throw std::invalid_argument("datum: character rank");

  std::vector<DynkinComponent> comps = classify(d.cartan);
  {
    std::ostringstream os;
    for (size_t i = 0; i < comps.size(); ++i) os << (i ? " x " : "") << comps[i].label;
    entry(rep, ValidationEntry::Status::Pass, "finite type", os.str());
  }

  // chi_i(g_i) != 1
  bool qii_ok = true;
  for (int i = 0; i < theta; ++i) {
    if (char_value(G, d.chi[i], d.g[i]).is_one()) {
      entry(rep, ValidationEntry::Status::Fail, "chi_i(g_i) != 1",
            "chi_" + std::to_string(i + 1) + "(g_" + std::to_string(i + 1) + ") = 1");
      qii_ok = false;
    }
  }
  if (qii_ok) entry(rep, ValidationEntry::Status::Pass, "chi_i(g_i) != 1", "all i");

  // Cartan condition chi_j(g_i) chi_i(g_j) = chi_i(g_i)^{a_ij}
  bool cartan_ok = true;
  for (int i = 0; i < theta && cartan_ok; ++i) {
    for (int j = 0; j < theta; ++j) {
      CycNum lhs = char_value(G, d.chi[j], d.g[i]) * char_value(G, d.chi[i], d.g[j]);
      CycNum rhs = char_value(G, d.chi[i], d.g[i]).pow(d.cartan(i, j));
      if (lhs != rhs) {
        entry(rep, ValidationEntry::Status::Fail, "Cartan condition",
              "fails at (i,j) = (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        cartan_ok = false;
        break;
      }
    }
  }
  if (cartan_ok)
    entry(rep, ValidationEntry::Status::Pass, "Cartan condition",
          "chi_j(g_i) chi_i(g_j) = chi_i(g_i)^a_ij for all i, j");

  // N_J constant on each component, reported per component.
  for (const auto& comp : comps) {
    unsigned long N0 = 0;
    bool constant = true;
    std::ostringstream os;
    for (int v : comp.vertices) {
      CycNum qvv = char_value(G, d.chi[v], d.g[v]);
      if (qvv.is_zero() || qvv.is_one()) {
        constant = false;
        break;
      }
      unsigned long n = qvv.mult_order().value_or(0);
      if (N0 == 0) N0 = n;
      if (n != N0) constant = false;
    }
    os << comp.label << " on vertices";
    for (int v : comp.vertices) os << " " << v + 1;
    if (constant && N0 > 1) {
      os << ": N_J = " << N0;
      entry(rep, ValidationEntry::Status::Pass, "component order N_J", os.str());
    } else {
      os << ": order of chi_i(g_i) is not constant";
      entry(rep, ValidationEntry::Status::Fail, "component order N_J", os.str());
    }
  }

  // Assumptions: odd order, prime to 3 on G2 components (warnings only).
  for (const auto& comp : comps) {
    for (int v : comp.vertices) {
      CycNum qvv = char_value(G, d.chi[v], d.g[v]);
      if (qvv.is_one()) continue;
      auto n = qvv.mult_order();
      if (!n) continue;
      if (*n % 2 == 0)
        entry(rep, ValidationEntry::Status::Warn, "assumptions",
              "order of chi_" + std::to_string(v + 1) + "(g_" + std::to_string(v + 1) + ") = " +
                  std::to_string(*n) + " is even");
      if (comp.label == "G2" && *n % 3 == 0)
        entry(rep, ValidationEntry::Status::Warn, "assumptions",
              "order of chi_" + std::to_string(v + 1) + "(g_" + std::to_string(v + 1) + ") = " +
                  std::to_string(*n) + " is divisible by 3 on a G2 component");
    }
  }

  // Linking constraints: lambda_ij = 0 if g_i g_j = 1 or chi_i chi_j != eps;
  // keys must have i < j and i not~ j.
  std::vector<int> comp_of(theta, -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c].vertices) comp_of[v] = static_cast<int>(c);
  bool lambda_ok = true;
  for (const auto& [key, value] : d.lambda) {
    auto [i, j] = key;
    std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    if (i < 0 || j <= i || j >= theta) {
      entry(rep, ValidationEntry::Status::Fail, "linking parameters",
            "lambda index " + at + " out of range (need i < j)");
      lambda_ok = false;
      continue;
    }
    if (value.is_zero()) continue;
    if (comp_of[i] == comp_of[j]) {
      entry(rep, ValidationEntry::Status::Fail, "linking parameters",
            "lambda_" + at + " links vertices in one component");
      lambda_ok = false;
    }
    if (is_identity(group_mul(G, d.g[i], d.g[j]))) {
      entry(rep, ValidationEntry::Status::Fail, "linking parameters",
            "lambda_" + at + " nonzero but g_i g_j = 1");
      lambda_ok = false;
    }
    if (!is_trivial(char_mul(G, d.chi[i], d.chi[j]))) {
      entry(rep, ValidationEntry::Status::Fail, "linking parameters",
            "lambda_" + at + " nonzero but chi_i chi_j != eps");
      lambda_ok = false;
    }
  }
  if (lambda_ok) entry(rep, ValidationEntry::Status::Pass, "linking parameters", "constraints hold");

  // Root-vector parameter constraints, over the convex positive-root order.
  std::vector<Root> roots = positive_roots(d.cartan);
  bool mu_ok = true;
  for (const auto& [idx, value] : d.mu) {
    if (idx < 0 || idx >= static_cast<int>(roots.size())) {
      entry(rep, ValidationEntry::Status::Fail, "root vector parameters",
            "mu index " + std::to_string(idx + 1) + " out of range");
      mu_ok = false;
      continue;
    }
    if (value.is_zero()) continue;
    RootData rd = root_data(d, roots[idx]);
    if (is_identity(group_pow(G, rd.g_alpha, static_cast<long>(rd.N_alpha)))) {
      entry(rep, ValidationEntry::Status::Fail, "root vector parameters",
            "mu nonzero at root " + std::to_string(idx + 1) + " but g_alpha^{N_alpha} = 1");
      mu_ok = false;
    }
    if (!is_trivial(char_pow(G, rd.chi_alpha, static_cast<long>(rd.N_alpha)))) {
      entry(rep, ValidationEntry::Status::Fail, "root vector parameters",
            "mu nonzero at root " + std::to_string(idx + 1) + " but chi_alpha^{N_alpha} != eps");
      mu_ok = false;
    }
  }
  if (mu_ok)
    entry(rep, ValidationEntry::Status::Pass, "root vector parameters", "constraints hold");

  return rep;
}

void require_valid(const CartanDatum& d) {
  ValidationReport rep = validate(d);
  if (!rep.ok()) throw std::invalid_argument("invalid datum: " + rep.first_failure());
}

std::vector<std::vector<CycNum>> q_matrix(const CartanDatum& d) {
  int theta = d.theta();
  std::vector<std::vector<CycNum>> q(theta, std::vector<CycNum>(theta));
  for (int i = 0; i < theta; ++i)
    for (int j = 0; j < theta; ++j) q[i][j] = char_value(d.group, d.chi[j], d.g[i]);
  return q;
}

RootData root_data(const CartanDatum& d, const Root& alpha) {
  const auto& G = d.group;
  GroupElement g = group_identity(G);
  Character chi = char_reduce(G, std::vector<long>(G.rank(), 0));
  for (int i = 0; i < d.theta(); ++i) {
    int n = alpha.coords[i];
    if (n == 0) continue;
    g = group_mul(G, g, group_pow(G, d.g[i], n));
    chi = char_mul(G, chi, char_pow(G, d.chi[i], n));
  }
  CycNum val = char_value(G, chi, g);
  if (val.is_one())
    throw std::domain_error("root_data: chi_alpha(g_alpha) = 1, N_alpha undefined");
  RootData rd;
  rd.g_alpha = g;
  rd.chi_alpha = chi;
  rd.N_alpha = val.mult_order().value();
  rd.M_alpha = char_order(G, chi);
  return rd;
}

}  // namespace hopfcoh
