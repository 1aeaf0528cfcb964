#pragma once

#include <string>
#include <vector>

#include "hyperchip/hypergraph.hpp"

namespace hyperchip {

/// Exponent vector over the nonsink vertices, in nonsink order.
using Monomial = std::vector<int>;

/// One generator m_T per nonempty sink-free set T, with exponent deg_T(i) at
/// each i in T. Ordered by the bitmask of T.
std::vector<Monomial> cut_ideal_generators(const RootedHypergraph& h,
                                           int max_vertices = 20);

/// Antichain under divisibility generating the same ideal.
std::vector<Monomial> minimal_generators(const std::vector<Monomial>& gens);

/// True iff no generator divides x^c.
bool is_standard_monomial(const std::vector<Monomial>& gens, const Configuration& c);

/// Human syntax, e.g. "x1^3*x2^1"; "1" for the empty monomial.
std::string monomial_to_string(const Monomial& m);

}  // namespace hyperchip
