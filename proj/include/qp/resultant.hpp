#pragma once

#include "qp/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qp {

// Square matrix of polynomials whose determinant is Res_var(f, g), f-rows
// first; dimension deg_var(f) + deg_var(g).
struct SylvesterMatrix {
    std::vector<std::vector<MultiPoly>> m;
    std::string elim_var;
};

SylvesterMatrix build_sylvester(const MultiPoly& f, const MultiPoly& g, int var);

// Exact determinant by fraction-free Gaussian elimination. An inexact
// intermediate division indicates a bug and throws logic_error.
MultiPoly bareiss_det(const SylvesterMatrix& m);

// det Syl(f,g) via the subresultant PRS. Dispatches to dense univariate or
// bivariate kernels when few variables are in play.
MultiPoly resultant_prs(const MultiPoly& f, const MultiPoly& g, int var);

// deg_elim(g)*deg_target(f) + deg_elim(f)*deg_target(g); sound upper bound
// for deg_target of the resultant.
long resultant_degree_bound(const MultiPoly& f, const MultiPoly& g, int elim_var, int target_var);

struct InterpPlan {
    std::string elim_var, interp_var;
    long degree_bound = 0;
    std::vector<long> nodes;          // degree_bound + 1 usable nodes
    std::vector<long> skipped_nodes;  // nodes rejected because a leading coefficient vanished
};

InterpPlan make_interp_plan(const MultiPoly& f, const MultiPoly& g, int elim_var, int interp_var);

struct InterpOptions {
    int workers = 1;
    std::string workdir;  // when nonempty: plan.txt, node_<k>.poly, result.poly checkpoints
    long max_nodes = -1;  // stop after this many nodes (checkpointed dry runs); -1 = all
};

// Resultant by evaluation at integer nodes and coefficient-wise
// interpolation; equals resultant_prs. Throws if a non-integer coefficient
// appears after interpolation.
MultiPoly resultant_interp(const MultiPoly& f, const MultiPoly& g, int elim_var, int interp_var,
                           const InterpOptions& opts = {});

// Unique polynomial of degree < #points through the given points.
QPoly lagrange_interpolate(const std::vector<std::pair<long, Rational>>& points);

// Interpolation of integer values at integer nodes via Newton forward
// differences; same polynomial as Lagrange.
QPoly newton_interpolate(const std::vector<long>& nodes, const std::vector<Rational>& values);

// The unique candidate whose branch through the reference initial terms
// matches the reference series: residual valuation >= match_order when the
// reference series is substituted for `var`. Throws an ambiguity error
// listing residual valuations when zero or several candidates match.
struct SeriesReference {
    std::vector<Rational> coeffs;  // reference series c_0..c_{N-1} in expansion_var
    int series_var;                // index of the matched unknown in the candidates' var list
    int expansion_var;             // index of the expansion variable
};

MultiPoly combinatorial_factor(const std::vector<MultiPoly>& candidates, const SeriesReference& ref,
                               int match_order);

}  // namespace qp
