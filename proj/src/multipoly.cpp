#include "qp/multipoly.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qp {

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const BigInt& c) {
    MultiPoly p(std::move(variables));
    if (c != 0) p.terms.emplace(ExpVec(p.vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name, unsigned power) {
    MultiPoly p(std::move(variables));
    int idx = p.var_index(name);
    if (idx < 0) throw std::invalid_argument("MultiPoly::variable: unknown variable " + name);
    ExpVec e(p.vars.size(), 0);
    e[idx] = power;
    p.terms.emplace(std::move(e), BigInt(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    const ExpVec& e = terms.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

BigInt MultiPoly::constant_value() const {
    auto it = terms.find(ExpVec(vars.size(), 0));
    return it == terms.end() ? BigInt(0) : it->second;
}

int MultiPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

void MultiPoly::add_term(const ExpVec& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

int MultiPoly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
        int t = 0;
        for (unsigned x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (vars != o.vars) throw std::invalid_argument("MultiPoly+: variable lists differ");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (vars != o.vars) throw std::invalid_argument("MultiPoly-: variable lists differ");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (vars != o.vars) throw std::invalid_argument("MultiPoly*: variable lists differ");
    MultiPoly r(vars);
    ExpVec e(vars.size());
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const BigInt& s) const {
    if (s == 0) return MultiPoly(vars);
    MultiPoly r(vars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(vars, BigInt(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_along(int var) const {
    int d = degree(var);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(d + 1, 0)), MultiPoly(vars));
    for (const auto& [e, c] : terms) {
        ExpVec r = e;
        unsigned k = r[var];
        r[var] = 0;
        out[k].terms.emplace(std::move(r), c);
    }
    return out;
}

MultiPoly MultiPoly::assemble_along(int var, const std::vector<MultiPoly>& coeffs,
                                    const std::vector<std::string>& vars) {
    MultiPoly r(vars);
    for (size_t k = 0; k < coeffs.size(); ++k)
        for (const auto& [e, c] : coeffs[k].terms) {
            ExpVec x = e;
            x[var] += static_cast<unsigned>(k);
            r.add_term(x, c);
        }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vars);
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        ExpVec x = e;
        unsigned k = x[var]--;
        r.add_term(x, c * BigInt(k));
    }
    return r;
}

MultiPoly MultiPoly::specialize_int(int var, const BigInt& value) const {
    MultiPoly r(vars);
    for (const auto& [e, c] : terms) {
        ExpVec x = e;
        unsigned k = x[var];
        x[var] = 0;
        r.add_term(x, c * pow_int(value, k));
    }
    return r;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& new_vars) const {
    std::vector<int> map(vars.size(), -1);
    for (size_t i = 0; i < vars.size(); ++i) {
        for (size_t j = 0; j < new_vars.size(); ++j)
            if (new_vars[j] == vars[i]) { map[i] = static_cast<int>(j); break; }
    }
    MultiPoly r(new_vars);
    for (const auto& [e, c] : terms) {
        ExpVec x(new_vars.size(), 0);
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0)
                throw std::invalid_argument("with_vars: variable " + vars[i] + " not in new list");
            x[map[i]] = e[i];
        }
        r.add_term(x, c);
    }
    return r;
}

MultiPoly MultiPoly::drop_unused_vars() const {
    std::vector<std::string> used;
    for (size_t i = 0; i < vars.size(); ++i) {
        bool u = false;
        for (const auto& [e, c] : terms)
            if (e[i] > 0) { u = true; break; }
        if (u) used.push_back(vars[i]);
    }
    return with_vars(used);
}

BigInt MultiPoly::int_content() const {
    BigInt g(0);
    for (const auto& [e, c] : terms) {
        g = gcd_int(g, c);
        if (g == 1) break;
    }
    return g;
}

MultiPoly MultiPoly::primitive_int() const {
    BigInt g = int_content();
    if (g == 0 || g == 1) return *this;
    MultiPoly r(vars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, exact_div(c, g));
    return r;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        BigInt a = abs(c);
        if (!first) os << (sign(c) < 0 ? " - " : " + ");
        else if (sign(c) < 0) os << "-";
        bool mono = false;
        std::ostringstream m;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (mono) m << "*";
            m << vars[i];
            if (e[i] > 1) m << "^" << e[i];
            mono = true;
        }
        if (!mono) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << m.str();
        }
        first = false;
    }
    return os.str();
}

bool try_exact_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& q) {
    if (b.is_zero()) return false;
    if (a.vars != b.vars) throw std::invalid_argument("exact_divide: variable lists differ");
    MultiPoly rem = a;
    MultiPoly quo(a.vars);
    const auto& blead = *b.terms.begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms.begin();
        // monomial divisibility of leading terms
        ExpVec e(rem.vars.size());
        bool ok = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (rlead.first[i] < blead.first[i]) { ok = false; break; }
            e[i] = rlead.first[i] - blead.first[i];
        }
        if (!ok || !divides(blead.second, rlead.second)) return false;
        BigInt c = exact_div(rlead.second, blead.second);
        MultiPoly t(a.vars);
        t.terms.emplace(e, c);
        quo.add_term(e, c);
        rem = rem - t * b;
    }
    q = std::move(quo);
    return true;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_exact_divide(a, b, q)) {
        throw std::domain_error("exact_divide: division not exact");
    }
    return q;
}

ZPoly to_zpoly(const MultiPoly& p, int var) {
    std::vector<BigInt> c(static_cast<size_t>(std::max(p.degree(var) + 1, 0)), BigInt(0));
    for (const auto& [e, coef] : p.terms) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0)
                throw std::invalid_argument("to_zpoly: polynomial not univariate in requested variable");
        c[e[var]] = coef;
    }
    return ZPoly(std::move(c));
}

MultiPoly from_zpoly(const ZPoly& p, std::vector<std::string> vars, int var) {
    MultiPoly r(std::move(vars));
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        ExpVec e(r.vars.size(), 0);
        e[var] = static_cast<unsigned>(i);
        r.terms.emplace(std::move(e), p.c[i]);
    }
    return r;
}

std::vector<ZPoly> to_bipoly(const MultiPoly& p, int var_outer, int var_inner) {
    int d = p.degree(var_outer);
    std::vector<std::vector<BigInt>> rows(static_cast<size_t>(std::max(d + 1, 0)));
    for (const auto& [e, c] : p.terms) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var_outer && static_cast<int>(i) != var_inner && e[i] != 0)
                throw std::invalid_argument("to_bipoly: extra variable in use");
        auto& row = rows[e[var_outer]];
        if (row.size() <= e[var_inner]) row.resize(e[var_inner] + 1, BigInt(0));
        row[e[var_inner]] = c;
    }
    std::vector<ZPoly> out(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) out[i] = ZPoly(std::move(rows[i]));
    return out;
}

MultiPoly from_bipoly(const std::vector<ZPoly>& b, std::vector<std::string> vars, int var_outer,
                      int var_inner) {
    MultiPoly r(std::move(vars));
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].c.size(); ++j) {
            if (b[i].c[j] == 0) continue;
            ExpVec e(r.vars.size(), 0);
            e[var_outer] = static_cast<unsigned>(i);
            e[var_inner] = static_cast<unsigned>(j);
            r.terms.emplace(std::move(e), b[i].c[j]);
        }
    return r;
}

std::string to_canonical_text(const MultiPoly& p) {
    std::ostringstream os;
    os << "vars:";
    for (const auto& v : p.vars) os << " " << v;
    os << "\n";
    for (const auto& [e, c] : p.terms) {
        os << c.get_str();
        for (unsigned x : e) os << " " << x;
        os << "\n";
    }
    return os.str();
}

MultiPoly parse_canonical_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    MultiPoly p;
    bool have_vars = false;
    GradedLexBefore before;
    const ExpVec* prev = nullptr;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "vars:") {
            if (have_vars) throw std::invalid_argument("parse: duplicate vars line");
            std::string v;
            while (ls >> v) p.vars.push_back(v);
            have_vars = true;
            continue;
        }
        if (!have_vars) throw std::invalid_argument("parse: term before vars line");
        BigInt c = bigint_from_string(tok);
        ExpVec e(p.vars.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (!(ls >> e[i])) throw std::invalid_argument("parse: short exponent vector");
        }
        unsigned extra;
        if (ls >> extra) throw std::invalid_argument("parse: long exponent vector");
        if (c == 0) throw std::invalid_argument("parse: zero coefficient stored");
        auto [it, inserted] = p.terms.emplace(e, c);
        if (!inserted) throw std::invalid_argument("parse: duplicate term");
        if (prev && !before(*prev, it->first))
            throw std::invalid_argument("parse: terms not in canonical order");
        prev = &it->first;
    }
    if (!have_vars) throw std::invalid_argument("parse: missing vars line");
    return p;
}

MultiPoly load_poly_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open polynomial file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_canonical_text(ss.str());
}

void save_poly_file(const MultiPoly& p, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write polynomial file: " + path);
    f << to_canonical_text(p);
}

}  // namespace qp
