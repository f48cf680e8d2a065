#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/cyclotomic.hpp"
#include "hopfcoh/rootsystem.hpp"

namespace hopfcoh {

/// Finite abelian group given by invariant factors: prod_j Z/d_j.
struct FiniteAbelianGroup {
  std::vector<long> orders;

  size_t rank() const { return orders.size(); }
  /// Working cyclotomic order L = lcm of the d_j.
  unsigned long cyclotomic_order() const;
  bool operator==(const FiniteAbelianGroup& o) const { return orders == o.orders; }
};

struct GroupElement {
  std::vector<long> exps;  // componentwise 0 <= exps_j < d_j

  bool operator==(const GroupElement& o) const { return exps == o.exps; }
  bool operator<(const GroupElement& o) const { return exps < o.exps; }
};

GroupElement group_identity(const FiniteAbelianGroup& G);
GroupElement group_reduce(const FiniteAbelianGroup& G, std::vector<long> exps);
GroupElement group_mul(const FiniteAbelianGroup& G, const GroupElement& a, const GroupElement& b);
GroupElement group_pow(const FiniteAbelianGroup& G, const GroupElement& a, long n);
bool is_identity(const GroupElement& g);
std::vector<GroupElement> all_elements(const FiniteAbelianGroup& G);

/// Character of the group, stored by dual exponents: the value on e is
/// prod_j zeta_{d_j}^{exps_j e_j}, computed at the working order L.
struct Character {
  std::vector<long> exps;

  bool operator==(const Character& o) const { return exps == o.exps; }
};

Character char_reduce(const FiniteAbelianGroup& G, std::vector<long> exps);
Character char_mul(const FiniteAbelianGroup& G, const Character& a, const Character& b);
Character char_pow(const FiniteAbelianGroup& G, const Character& a, long n);
bool is_trivial(const Character& chi);
/// Order of chi in the dual group.
unsigned long char_order(const FiniteAbelianGroup& G, const Character& chi);
CycNum char_value(const FiniteAbelianGroup& G, const Character& chi, const GroupElement& g);

/// The datum (Gamma, (g_i), (chi_i), (a_ij)) with linking parameters lambda
/// and root-vector parameters mu (mu is indexed by position in the convex
/// positive-root order).
struct CartanDatum {
  FiniteAbelianGroup group;
  CartanMatrix cartan;
  std::vector<GroupElement> g;
  std::vector<Character> chi;
  std::map<std::pair<int, int>, CycNum> lambda;  // keys (i, j), 0-based, i < j
  std::map<int, CycNum> mu;                      // key: positive-root index
  std::optional<unsigned long> q_order;          // display order for scalars

  int theta() const { return cartan.rank(); }
  /// lcm of group invariant factors and any declared q_order.
  unsigned long working_order() const;
};

struct ValidationEntry {
  enum class Status { Pass, Warn, Fail };
  Status status;
  std::string name;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool ok() const;        // no Fail entries
  bool clean() const;     // no Fail or Warn entries
  std::string first_failure() const;
};

ValidationReport validate(const CartanDatum& d);

/// Throws std::invalid_argument (naming the condition) unless validate passes.
void require_valid(const CartanDatum& d);

std::vector<std::vector<CycNum>> q_matrix(const CartanDatum& d);

struct RootData {
  GroupElement g_alpha;
  Character chi_alpha;
  unsigned long N_alpha;  // multiplicative order of chi_alpha(g_alpha)
  unsigned long M_alpha;  // order of chi_alpha in the dual group
};

RootData root_data(const CartanDatum& d, const Root& alpha);

}  // namespace hopfcoh
