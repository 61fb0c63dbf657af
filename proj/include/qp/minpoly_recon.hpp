#pragma once

#include "qp/multipoly.hpp"
#include "qp/unipoly.hpp"

#include <optional>
#include <vector>

namespace qp {

// Reconstructs a polynomial relation sum_i a_i(x) f(x)^i = 0 (mod x^len(f))
// with deg_y <= deg_y_bound and deg a_i <= deg_x_bound, by an exact
// order-basis (Hermite-Pade) computation. Returns the relation of smallest
// degree profile found, normalized primitive, or nullopt when the series is
// too short / no relation within the bounds exists. The caller must verify
// the result against independent data (residuals, trial division).
std::optional<MultiPoly> minpoly_from_series(const std::vector<Rational>& f, int deg_y_bound,
                                             int deg_x_bound, const std::string& y_name,
                                             const std::string& x_name);

// Nullspace vector of the column family: constants a with sum_i a_i col_i = 0
// exactly over the full common length. Returns a vector with cleared integer
// entries, or nullopt if the columns are linearly independent.
std::optional<std::vector<BigInt>> constant_relation(const std::vector<std::vector<Rational>>& columns);

}  // namespace qp
