#pragma once

#include <optional>

#include "hopfcoh/algebra.hpp"
#include "hopfcoh/cohomology.hpp"
#include "hopfcoh/datum.hpp"

namespace hopfcoh {
namespace catalog {

/// theta = 1, N = 2, Gamma = Z/2 with the sign character (4-dimensional smash).
CartanDatum sweedler();

/// theta = 2, A1 x A1, N = (2, 3), q_12 = zeta_6, Gamma = Z/6 x Z/6.
CartanDatum qci_2_3();

/// theta = 2, A1 x A1, N = (2, 2), Gamma = Z/2, both characters the sign.
CartanDatum a1a1_z2();

/// Type A1 x A1 x A1 over Gamma = (Z/l)^2 with q-matrix
/// [[q, q^-1, 1], [q, q^-2, q], [1, q^-1, q]], q = zeta_l; eta1 eta2 eta3 is
/// the degree-3 odd invariant.
CartanDatum a1cubed(unsigned long ell);

/// Type A2 x A1 over Gamma = (Z/l)^2: chi_1, chi_2 as for u_q(sl3)+,
/// g3 = g1 g2, chi3 = chi1^-1 chi2^-1.
CartanDatum a2xa1(unsigned long ell);

/// The rank-1 specialization with two A1 blocks, g1 = g2, chi2 = chi1^-1,
/// lambda_12 = (q^-1 - q)^-1, Gamma = Z/l, q = zeta_l.
CartanDatum uq_sl2_datum(unsigned long ell);

/// (q^-1 - q)^-1 at q = zeta_l^k.
CycNum uq_sl2_lambda(unsigned long ell, long q_power = 1);

/// The E, F, K presentation at q = zeta_l (truncated u or its lift U).
AlgebraPresentation uq_sl2_presentation(unsigned long ell, bool truncated);

/// Recognizes a datum of the uq_sl2 shape (two linked A1 blocks over a
/// cyclic group) and builds its presentation; nullopt otherwise.
std::optional<AlgebraPresentation> uq_sl2_from_datum(const CartanDatum& d, bool truncated);

/// Gr u_q^+ specialization: qci on the positive roots of `cartan` with
/// q_{beta gamma} = q^{(beta, gamma)}, q = zeta_l, all N_i = l.
GrData gk_specialization(const CartanMatrix& cartan, unsigned long ell);

}  // namespace catalog
}  // namespace hopfcoh
