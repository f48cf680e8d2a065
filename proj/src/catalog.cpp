#include "hopfcoh/catalog.hpp"

#include <stdexcept>

namespace hopfcoh {
namespace catalog {

CartanDatum sweedler() {
  CartanDatum d;
  d.group.orders = {2};
  d.cartan.a = {{2}};
  d.g = {group_reduce(d.group, {1})};
  d.chi = {char_reduce(d.group, {1})};
  return d;
}

CartanDatum qci_2_3() {
  CartanDatum d;
  d.group.orders = {6, 6};
  d.cartan.a = {{2, 0}, {0, 2}};
  d.g = {group_reduce(d.group, {1, 0}), group_reduce(d.group, {0, 1})};
  d.chi = {char_reduce(d.group, {3, 5}), char_reduce(d.group, {1, 2})};
  return d;
}

CartanDatum a1a1_z2() {
  CartanDatum d;
  d.group.orders = {2};
  d.cartan.a = {{2, 0}, {0, 2}};
  d.g = {group_reduce(d.group, {1}), group_reduce(d.group, {1})};
  d.chi = {char_reduce(d.group, {1}), char_reduce(d.group, {1})};
  return d;
}

CartanDatum a1cubed(unsigned long ell) {
  long l = static_cast<long>(ell);
  CartanDatum d;
  d.group.orders = {l, l};
  d.cartan.a = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  d.g = {group_reduce(d.group, {1, 0}), group_reduce(d.group, {1, 1}),
         group_reduce(d.group, {0, 1})};
  d.chi = {char_reduce(d.group, {1, 0}), char_reduce(d.group, {-1, -1}),
           char_reduce(d.group, {0, 1})};
  return d;
}

CartanDatum a2xa1(unsigned long ell) {
  long l = static_cast<long>(ell);
  CartanDatum d;
  d.group.orders = {l, l};
  d.cartan.a = {{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}};
  d.g = {group_reduce(d.group, {1, 0}), group_reduce(d.group, {0, 1}),
         group_reduce(d.group, {1, 1})};
  d.chi = {char_reduce(d.group, {2, -1}), char_reduce(d.group, {-1, 2}),
           char_reduce(d.group, {-1, -1})};
  return d;
}

CycNum uq_sl2_lambda(unsigned long ell, long q_power) {
  CycNum q = CycNum::root_of_unity(ell, q_power);
  return (q.inverse() - q).inverse();
}

CartanDatum uq_sl2_datum(unsigned long ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("uq_sl2_datum: odd ell >= 3 required");
  long l = static_cast<long>(ell);
  CartanDatum d;
  d.group.orders = {l};
  d.cartan.a = {{2, 0}, {0, 2}};
  d.g = {group_reduce(d.group, {1}), group_reduce(d.group, {1})};
  d.chi = {char_reduce(d.group, {2}), char_reduce(d.group, {-2})};
  d.lambda[{0, 1}] = uq_sl2_lambda(ell);
  d.q_order = ell;
  return d;
}

AlgebraPresentation uq_sl2_presentation(unsigned long ell, bool truncated) {
  return AlgebraPresentation::uq_sl2(ell, 1, uq_sl2_lambda(ell), truncated);
}

std::optional<AlgebraPresentation> uq_sl2_from_datum(const CartanDatum& d, bool truncated) {
  if (d.theta() != 2 || d.group.rank() != 1) return std::nullopt;
  if (d.cartan.a != std::vector<std::vector<int>>{{2, 0}, {0, 2}}) return std::nullopt;
  if (!(d.g[0] == d.g[1])) return std::nullopt;
  if (!is_trivial(char_mul(d.group, d.chi[0], d.chi[1]))) return std::nullopt;
  auto it = d.lambda.find({0, 1});
  if (it == d.lambda.end() || it->second.is_zero()) return std::nullopt;
  unsigned long ell = static_cast<unsigned long>(d.group.orders[0]);
  if (ell % 2 == 0) return std::nullopt;
  // chi_1(g_1) = q^2 with q a primitive ell-th root: q = chi_1(g_1)^{(ell+1)/2}
  CycNum q11 = char_value(d.group, d.chi[0], d.g[0]);
  auto ord = q11.mult_order();
  if (!ord || *ord != ell) return std::nullopt;
  long e = -1;
  for (long k = 0; k < static_cast<long>(ell); ++k)
    if (CycNum::root_of_unity(ell, k) == q11) {
      e = k;
      break;
    }
  long q_power = (e * static_cast<long>((ell + 1) / 2)) % static_cast<long>(ell);
  if (std::gcd(static_cast<unsigned long>(q_power), ell) != 1) return std::nullopt;
  return AlgebraPresentation::uq_sl2(ell, q_power, it->second, truncated);
}

GrData gk_specialization(const CartanMatrix& cartan, unsigned long ell) {
  std::vector<Root> roots = positive_roots(cartan);
  std::vector<Rational> d = symmetrizer(cartan);
  int n = cartan.rank();
  int r = static_cast<int>(roots.size());
  auto pairing = [&](const Root& x, const Root& y) {
    Rational acc(0);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        acc += Rational(x.coords[static_cast<size_t>(s)]) *
               Rational(y.coords[static_cast<size_t>(t)]) * d[static_cast<size_t>(s)] *
               Rational(cartan(s, t));
    if (acc.get_den() != 1)
      throw std::logic_error("gk_specialization: non-integer root pairing");
    return acc.get_num().get_si();
  };
  // E_a E_b = q^{(a,b)} E_b E_a for a later than b in the convex order, so
  // x_i x_j = q^{-(b_i, b_j)} x_j x_i for i < j
  std::vector<std::vector<CycNum>> q(static_cast<size_t>(r),
                                     std::vector<CycNum>(static_cast<size_t>(r), CycNum::one()));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      q[static_cast<size_t>(i)][static_cast<size_t>(j)] = CycNum::root_of_unity(
          ell, -pairing(roots[static_cast<size_t>(i)], roots[static_cast<size_t>(j)]));
  std::vector<int> heights;
  for (const Root& rt : roots) heights.push_back(height(rt));
  GrData gr =
      gr_raw(std::vector<unsigned long>(static_cast<size_t>(r), ell), q, ell, heights);
  for (int i = 0; i < r; ++i) {
    gr.gens[static_cast<size_t>(i)].root = roots[static_cast<size_t>(i)];
    std::string lbl;
    for (int s = 0; s < n; ++s) {
      int c = roots[static_cast<size_t>(i)].coords[static_cast<size_t>(s)];
      if (c == 0) continue;
      if (!lbl.empty()) lbl += "+";
      if (c != 1) lbl += std::to_string(c);
      lbl += "a" + std::to_string(s + 1);
    }
    gr.gens[static_cast<size_t>(i)].label = lbl;
  }
  return gr;
}

}  // namespace catalog
}  // namespace hopfcoh
