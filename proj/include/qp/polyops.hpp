#pragma once

#include "qp/multipoly.hpp"

#include <utility>
#include <vector>

namespace qp {

// Integer-primitive with positive leading coefficient under graded lex.
MultiPoly normalize_poly(const MultiPoly& p);

// Content of p along var: multivariate gcd of the var-coefficients.
MultiPoly content_along(const MultiPoly& p, int var);

// Full multivariate gcd; primitive, positive leading coefficient. The var
// argument picks the main variable of the subresultant remainder sequence.
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b, int var);
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b);  // picks its own main variable

// p / gcd(p, dp/dvar), normalized primitive.
MultiPoly squarefree_part(const MultiPoly& p, int var);

// Yun square-free decomposition of a primitive univariate polynomial:
// p = c * prod f_k^k with the f_k square-free and pairwise coprime.
std::vector<std::pair<ZPoly, int>> yun_squarefree(const ZPoly& p);

// Signed discriminant: (-1)^(d(d-1)/2) Res_var(p, dp/dvar) / lc_var(p).
MultiPoly discriminant(const MultiPoly& p, int var);

}  // namespace qp
