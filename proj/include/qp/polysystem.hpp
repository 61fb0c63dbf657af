#pragma once

#include "qp/multipoly.hpp"
#include "qp/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace qp {

// A named collection of polynomial constraints among series unknowns.
// Variables of every constraint are params ++ unknowns, in that order;
// params[0] is the expansion variable. Each constraint carries the unknown
// it is used to update during relaxation sweeps.
struct PolySystem {
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> unknowns;
    std::vector<MultiPoly> constraints;
    std::vector<std::string> targets;
    std::map<std::string, Rational> seeds;

    std::vector<std::string> all_vars() const;
    void validate() const;  // shapes, targets exist, seed vars exist
};

// Fixture format:
//   system: <name>
//   unknowns: ...
//   params: ...
//   seed: <var>=<rational> ...
//   targets: ...
// followed by one canonical-format polynomial per constraint, separated by
// blank lines.
PolySystem parse_system_text(const std::string& text);
PolySystem load_system_file(const std::string& path);
std::string to_system_text(const PolySystem& sys);

// Order-by-order solution of the system: every constraint has residual
// valuation >= order at the returned truncation. Params beyond the expansion
// variable must be pinned to rational values.
std::map<std::string, SeriesQ> solve_system_series(const PolySystem& sys, int order,
                                                   const std::map<std::string, Rational>& pins = {});

// Same, with the single extra parameter left symbolic; coefficients live in
// Q(param). Used for full bivariate residual checks at reduced order.
std::map<std::string, SeriesF> solve_system_series_sym(const PolySystem& sys, int order);

}  // namespace qp
