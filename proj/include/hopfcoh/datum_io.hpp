#pragma once

#include <string>
#include <string_view>

#include "hopfcoh/datum.hpp"
#include "hopfcoh/scalar_io.hpp"

namespace hopfcoh {

/// Datum file grammar (whitespace-insensitive, '#' comments):
///   group.orders = [d1, d2, ...]
///   cartan       = [[2, -1], [-1, 2]]
///   g            = [[e11, e12], [e21, e22], ...]    # one row per generator
///   chi          = [[f11, f12], ...]                # dual exponent vectors
///   lambda       = [(i, j, scalar), ...]            # optional, 1-based, i < j
///   mu           = [(k, scalar), ...]               # optional, 1-based root index
///   q_order      = L                                # optional display order
/// Scalars use the zeta grammar of scalar_io.hpp.
CartanDatum parse_datum(std::string_view text);

CartanDatum load_datum(const std::string& path);

/// Canonical serialization; parse_datum(serialize_datum(d)) reproduces d.
std::string serialize_datum(const CartanDatum& d);

}  // namespace hopfcoh
