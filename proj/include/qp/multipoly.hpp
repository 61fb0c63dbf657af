#pragma once

#include "qp/numeric.hpp"
#include "qp/unipoly.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qp {

using ExpVec = std::vector<unsigned>;

// Graded lexicographic, descending: begin() of the term map is the leading
// term. This single ordering drives printing, parsing and exact division, so
// serialized output is byte-stable.
struct GradedLexBefore {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponents
    }
};

// Sparse multivariate polynomial over the integers. The variable list is
// ordered and shared by every exponent vector; no zero coefficients are
// stored.
class MultiPoly {
public:
    std::vector<std::string> vars;
    std::map<ExpVec, BigInt, GradedLexBefore> terms;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables) : vars(std::move(variables)) {}

    static MultiPoly zero(std::vector<std::string> variables) { return MultiPoly(std::move(variables)); }
    static MultiPoly constant(std::vector<std::string> variables, const BigInt& c);
    static MultiPoly variable(std::vector<std::string> variables, const std::string& name, unsigned power = 1);

    size_t nvars() const { return vars.size(); }
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    BigInt constant_value() const;  // coefficient of the all-zero exponent
    size_t term_count() const { return terms.size(); }

    int var_index(const std::string& name) const;  // -1 if absent

    void add_term(const ExpVec& e, const BigInt& c);  // accumulates, erases zeros

    int degree(int var) const;        // -1 for the zero polynomial
    int total_degree() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const BigInt& s) const;
    bool operator==(const MultiPoly& o) const { return vars == o.vars && terms == o.terms; }

    MultiPoly pow(unsigned e) const;

    // Dense view along one variable: result[k] = coefficient of var^k, with
    // var's exponent zeroed but the variable list unchanged.
    std::vector<MultiPoly> coeffs_along(int var) const;
    static MultiPoly assemble_along(int var, const std::vector<MultiPoly>& coeffs,
                                    const std::vector<std::string>& vars);

    MultiPoly derivative(int var) const;
    MultiPoly specialize_int(int var, const BigInt& value) const;  // var := value, exponent zeroed

    // Reorders/extends the variable list; every existing variable must map.
    MultiPoly with_vars(const std::vector<std::string>& new_vars) const;
    // Drop variables the polynomial does not use.
    MultiPoly drop_unused_vars() const;

    BigInt int_content() const;          // >= 0
    MultiPoly primitive_int() const;     // divided by integer content (sign kept)

    std::string str() const;
};

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);  // throws with remainder witness
bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& q);

// Univariate/bivariate bridges.
ZPoly to_zpoly(const MultiPoly& p, int var);                       // requires all other exponents zero
MultiPoly from_zpoly(const ZPoly& p, std::vector<std::string> vars, int var);
// Dense bivariate: out[i] = ZPoly in var_inner for the coefficient of var_outer^i.
std::vector<ZPoly> to_bipoly(const MultiPoly& p, int var_outer, int var_inner);
MultiPoly from_bipoly(const std::vector<ZPoly>& b, std::vector<std::string> vars, int var_outer,
                      int var_inner);

// Canonical text format:
//   vars: x y z
//   <integer coefficient> <e1> <e2> ... <ek>   (one term per line, canonical order)
// '#' starts a comment. Round-trips bit-exactly.
std::string to_canonical_text(const MultiPoly& p);
MultiPoly parse_canonical_text(const std::string& text);
MultiPoly load_poly_file(const std::string& path);
void save_poly_file(const MultiPoly& p, const std::string& path);

// Rational function of polynomials; reduced on construction, denominator
// nonzero and sign-normalized (positive leading coefficient).
struct PolyFraction {
    MultiPoly num, den;

    PolyFraction() = default;
    PolyFraction(MultiPoly n, MultiPoly d);  // reduces

    static PolyFraction from_poly(MultiPoly p);

    bool is_zero() const { return num.is_zero(); }
    PolyFraction operator+(const PolyFraction& o) const;
    PolyFraction operator-(const PolyFraction& o) const;
    PolyFraction operator*(const PolyFraction& o) const;
    PolyFraction operator/(const PolyFraction& o) const;
    PolyFraction operator-() const;
};

struct ClearedConstraint {
    MultiPoly poly;        // numerator, primitive
    MultiPoly multiplier;  // what the fraction was multiplied by
};

// For constraints equated to zero: clearing the denominator keeps the zero
// set away from den = 0.
ClearedConstraint clear_denominators(const PolyFraction& pf);

// Substitute vars[var] := value (a fraction in the same variable list).
PolyFraction substitute(const MultiPoly& p, int var, const PolyFraction& value);

}  // namespace qp
