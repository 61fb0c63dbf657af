#include "qp/resultant.hpp"

#include "qp/polyops.hpp"
#include "qp/series.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qp {

namespace {

// --- generic dense polynomial over an exact ring, for the subresultant PRS ---

template <class R, class Ops>
void dp_trim(std::vector<R>& a, const Ops& ops) {
    while (!a.empty() && ops.is_zero(a.back())) a.pop_back();
}

template <class R, class Ops>
std::vector<R> dp_prem(const std::vector<R>& a, const std::vector<R>& b, const Ops& ops) {
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    std::vector<R> r = a;
    const R& blc = b.back();
    for (int k = da - db; k >= 0; --k) {
        R top = r[k + db];
        for (int j = 0; j < k + db; ++j) {
            r[j] = ops.mul(r[j], blc);
            if (j >= k) r[j] = ops.sub(r[j], ops.mul(top, b[j - k]));
        }
        r[k + db] = ops.zero();
    }
    r.resize(db);
    dp_trim(r, ops);
    return r;
}

// Resultant via the subresultant PRS (Cohen, Alg. 3.3.7). Inputs trimmed,
// both of degree >= 1 unless one is constant.
template <class R, class Ops>
R dp_resultant(std::vector<R> A, std::vector<R> B, const Ops& ops) {
    if (A.empty() || B.empty()) return ops.zero();
    if (A.size() == 1) return ops.pow(A[0], B.size() - 1);
    if (B.size() == 1) return ops.pow(B[0], A.size() - 1);
    int s = 1;
    if (A.size() < B.size()) {
        if (((A.size() - 1) & 1) && ((B.size() - 1) & 1)) s = -s;
        std::swap(A, B);
    }
    R g = ops.one(), h = ops.one();
    while (true) {
        unsigned long da = A.size() - 1, db = B.size() - 1;
        unsigned long delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        std::vector<R> Rm = dp_prem(A, B, ops);
        A = std::move(B);
        R denom = ops.mul(g, ops.pow(h, delta));
        for (auto& x : Rm) x = ops.divexact(x, denom);
        B = std::move(Rm);
        g = A.back();
        if (delta > 0) h = ops.divexact(ops.pow(g, delta), ops.pow(h, delta - 1));
        if (B.empty()) return ops.zero();
        if (B.size() == 1) {
            unsigned long dA = A.size() - 1;
            R num = ops.pow(B[0], dA);
            R res = dA <= 1 ? num : ops.divexact(num, ops.pow(h, dA - 1));
            return s < 0 ? ops.neg(res) : res;
        }
    }
}

struct IntOps {
    BigInt zero() const { return BigInt(0); }
    BigInt one() const { return BigInt(1); }
    bool is_zero(const BigInt& a) const { return a == 0; }
    BigInt neg(const BigInt& a) const { return -a; }
    BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
    BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
    BigInt divexact(const BigInt& a, const BigInt& b) const { return exact_div(a, b); }
    BigInt pow(const BigInt& a, unsigned long e) const { return pow_int(a, e); }
};

struct ZPolyOps {
    ZPoly zero() const { return ZPoly{}; }
    ZPoly one() const { return ZPoly({BigInt(1)}); }
    bool is_zero(const ZPoly& a) const { return a.is_zero(); }
    ZPoly neg(const ZPoly& a) const { return -a; }
    ZPoly sub(const ZPoly& a, const ZPoly& b) const { return a - b; }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const { return a * b; }
    ZPoly divexact(const ZPoly& a, const ZPoly& b) const { return qp::divexact(a, b); }
    ZPoly pow(const ZPoly& a, unsigned long e) const {
        ZPoly r = one(), base = a;
        while (e) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
            e >>= 1;
        }
        return r;
    }
};

struct MPolyOps {
    std::vector<std::string> vars;
    MultiPoly zero() const { return MultiPoly(vars); }
    MultiPoly one() const { return MultiPoly::constant(vars, BigInt(1)); }
    bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
    MultiPoly neg(const MultiPoly& a) const { return -a; }
    MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
    MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) const { return exact_divide(a, b); }
    MultiPoly pow(const MultiPoly& a, unsigned long e) const { return a.pow(static_cast<unsigned>(e)); }
};

std::vector<int> other_used_vars(const MultiPoly& f, const MultiPoly& g, int var) {
    std::vector<int> used;
    for (size_t i = 0; i < f.vars.size(); ++i) {
        if (static_cast<int>(i) == var) continue;
        if (f.degree(static_cast<int>(i)) > 0 || g.degree(static_cast<int>(i)) > 0)
            used.push_back(static_cast<int>(i));
    }
    return used;
}

}  // namespace

SylvesterMatrix build_sylvester(const MultiPoly& f, const MultiPoly& g, int var) {
    int df = f.degree(var), dg = g.degree(var);
    if (df < 1 && dg < 1) throw std::invalid_argument("build_sylvester: both inputs constant in variable");
    if (df < 0 || dg < 0) throw std::invalid_argument("build_sylvester: zero polynomial");
    auto fc = f.coeffs_along(var), gc = g.coeffs_along(var);
    int n = df + dg;
    SylvesterMatrix sm;
    sm.elim_var = f.vars[var];
    sm.m.assign(n, std::vector<MultiPoly>(n, MultiPoly(f.vars)));
    for (int r = 0; r < dg; ++r)
        for (int j = 0; j <= df; ++j) sm.m[r][r + (df - j)] = fc[j];
    for (int r = 0; r < df; ++r)
        for (int j = 0; j <= dg; ++j) sm.m[dg + r][r + (dg - j)] = gc[j];
    return sm;
}

MultiPoly bareiss_det(const SylvesterMatrix& sm) {
    auto m = sm.m;
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("bareiss_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_det: matrix not square");
    const auto& vars = m[0][0].vars;
    MultiPoly prev = MultiPoly::constant(vars, BigInt(1));
    int sign_flips = 0;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly(vars);  // singular
            std::swap(m[k], m[swap_row]);
            ++sign_flips;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                MultiPoly q;
                if (!try_exact_divide(num, prev, q))
                    throw std::logic_error("bareiss_det: inexact intermediate division");
                m[i][j] = std::move(q);
            }
            m[i][k] = MultiPoly(vars);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return (sign_flips % 2) ? -det : det;
}

MultiPoly resultant_prs(const MultiPoly& f, const MultiPoly& g, int var) {
    if (f.vars != g.vars) throw std::invalid_argument("resultant_prs: variable lists differ");
    int df = f.degree(var), dg = g.degree(var);
    if (df < 1 && dg < 1)
        throw std::invalid_argument("resultant_prs: both inputs constant in the elimination variable");
    if (df < 0 || dg < 0) return MultiPoly(f.vars);  // resultant with 0
    auto used = other_used_vars(f, g, var);
    if (used.empty()) {
        BigInt r = dp_resultant<BigInt, IntOps>(to_zpoly(f, var).c, to_zpoly(g, var).c, IntOps{});
        return MultiPoly::constant(f.vars, r);
    }
    if (used.size() == 1) {
        int u = used[0];
        ZPoly r = dp_resultant<ZPoly, ZPolyOps>(to_bipoly(f, var, u), to_bipoly(g, var, u), ZPolyOps{});
        MultiPoly out(f.vars);
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (r.c[i] == 0) continue;
            ExpVec e(f.vars.size(), 0);
            e[u] = static_cast<unsigned>(i);
            out.terms.emplace(std::move(e), r.c[i]);
        }
        return out;
    }
    MPolyOps ops{f.vars};
    return dp_resultant<MultiPoly, MPolyOps>(f.coeffs_along(var), g.coeffs_along(var), ops);
}

long resultant_degree_bound(const MultiPoly& f, const MultiPoly& g, int elim_var, int target_var) {
    long de_f = std::max(f.degree(elim_var), 0), de_g = std::max(g.degree(elim_var), 0);
    long dt_f = std::max(f.degree(target_var), 0), dt_g = std::max(g.degree(target_var), 0);
    return de_g * dt_f + de_f * dt_g;
}

InterpPlan make_interp_plan(const MultiPoly& f, const MultiPoly& g, int elim_var, int interp_var) {
    InterpPlan plan;
    plan.elim_var = f.vars[elim_var];
    plan.interp_var = f.vars[interp_var];
    plan.degree_bound = resultant_degree_bound(f, g, elim_var, interp_var);
    MultiPoly lcf = f.coeffs_along(elim_var).back();
    MultiPoly lcg = g.coeffs_along(elim_var).back();
    long k = 1;
    while (static_cast<long>(plan.nodes.size()) < plan.degree_bound + 1) {
        bool bad = lcf.specialize_int(interp_var, BigInt(k)).is_zero() ||
                   lcg.specialize_int(interp_var, BigInt(k)).is_zero();
        if (bad) plan.skipped_nodes.push_back(k);
        else plan.nodes.push_back(k);
        ++k;
    }
    return plan;
}

QPoly lagrange_interpolate(const std::vector<std::pair<long, Rational>>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("lagrange_interpolate: duplicate nodes");
    QPoly acc;
    for (size_t i = 0; i < points.size(); ++i) {
        QPoly li(std::vector<Rational>{Rational(1)});
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            li = li * QPoly(std::vector<Rational>{Rational(-points[j].first), Rational(1)});
            denom *= Rational(points[i].first - points[j].first);
        }
        Rational w = points[i].second / denom;
        acc = acc + li * w;
    }
    return acc;
}

QPoly newton_interpolate(const std::vector<long>& nodes, const std::vector<Rational>& values) {
    size_t n = nodes.size();
    if (values.size() != n) throw std::invalid_argument("newton_interpolate: size mismatch");
    std::vector<Rational> dd = values;  // divided differences, built in place
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    QPoly acc;
    for (size_t i = n; i-- > 0;) {
        acc = acc * QPoly(std::vector<Rational>{Rational(-nodes[i]), Rational(1)});
        if (acc.c.empty()) acc.c.push_back(dd[i]);
        else acc.c[0] += dd[i];
        acc.normalize();
    }
    return acc;
}

namespace {

std::string plan_signature(const MultiPoly& f, const MultiPoly& g, const InterpPlan& plan) {
    std::ostringstream os;
    os << "elim " << plan.elim_var << "\ninterp " << plan.interp_var << "\nbound "
       << plan.degree_bound << "\n";
    os << "f-terms " << f.term_count() << " g-terms " << g.term_count() << "\n";
    return os.str();
}

}  // namespace

MultiPoly resultant_interp(const MultiPoly& f, const MultiPoly& g, int elim_var, int interp_var,
                           const InterpOptions& opts) {
    if (elim_var == interp_var)
        throw std::invalid_argument("resultant_interp: elimination and interpolation variables equal");
    InterpPlan plan = make_interp_plan(f, g, elim_var, interp_var);
    size_t n_nodes = plan.nodes.size();

    namespace fs = std::filesystem;
    bool use_dir = !opts.workdir.empty();
    if (use_dir) {
        fs::create_directories(opts.workdir);
        fs::path plan_path = fs::path(opts.workdir) / "plan.txt";
        std::string sig = plan_signature(f, g, plan);
        if (fs::exists(plan_path)) {
            std::ifstream in(plan_path);
            std::stringstream ss;
            ss << in.rdbuf();
            if (ss.str() != sig)
                throw std::runtime_error("resultant_interp: work directory holds a different plan");
        } else {
            std::ofstream out(plan_path);
            out << sig;
        }
    }

    std::vector<MultiPoly> node_values(n_nodes);
    std::vector<char> have(n_nodes, 0);
    if (use_dir) {
        for (size_t i = 0; i < n_nodes; ++i) {
            fs::path p = fs::path(opts.workdir) / ("node_" + std::to_string(plan.nodes[i]) + ".poly");
            if (fs::exists(p)) {
                node_values[i] = load_poly_file(p.string());
                have[i] = 1;
            }
        }
    }

    long budget = opts.max_nodes < 0 ? static_cast<long>(n_nodes) : opts.max_nodes;
    std::vector<size_t> todo;
    for (size_t i = 0; i < n_nodes && static_cast<long>(todo.size()) < budget; ++i)
        if (!have[i]) todo.push_back(i);

    auto compute_node = [&](size_t idx) {
        long k = plan.nodes[idx];
        MultiPoly fk = f.specialize_int(interp_var, BigInt(k));
        MultiPoly gk = g.specialize_int(interp_var, BigInt(k));
        MultiPoly r = resultant_prs(fk, gk, elim_var);
        node_values[idx] = std::move(r);
        have[idx] = 1;
        if (use_dir) {
            fs::path p = fs::path(opts.workdir) / ("node_" + std::to_string(k) + ".poly");
            save_poly_file(node_values[idx], p.string());
        }
    };

    int workers = std::max(opts.workers, 1);
    if (workers == 1 || todo.size() <= 1) {
        for (size_t idx : todo) compute_node(idx);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                while (true) {
                    size_t t = next.fetch_add(1);
                    if (t >= todo.size()) break;
                    compute_node(todo[t]);
                }
            });
        for (auto& th : pool) th.join();
    }

    size_t done = 0;
    for (size_t i = 0; i < n_nodes; ++i) done += have[i] ? 1 : 0;
    if (done < n_nodes)
        throw std::runtime_error("resultant_interp: partial run, computed " + std::to_string(done) +
                                 " of " + std::to_string(n_nodes) + " nodes (checkpointed)");

    // interpolate coefficient-wise: gather the union of monomials
    std::map<ExpVec, std::vector<Rational>, GradedLexBefore> columns;
    for (size_t i = 0; i < n_nodes; ++i)
        for (const auto& [e, c] : node_values[i].terms) {
            auto it = columns.find(e);
            if (it == columns.end())
                it = columns.emplace(e, std::vector<Rational>(n_nodes, Rational(0))).first;
            it->second[i] = Rational(c);
        }

    MultiPoly result(f.vars);
    for (auto& [e, vals] : columns) {
        QPoly poly = newton_interpolate(plan.nodes, vals);
        for (size_t j = 0; j < poly.c.size(); ++j) {
            if (poly.c[j] == 0) continue;
            if (poly.c[j].get_den() != 1)
                throw std::logic_error("resultant_interp: non-integer interpolated coefficient");
            ExpVec x = e;
            x[interp_var] = static_cast<unsigned>(j);
            result.add_term(x, poly.c[j].get_num());
        }
    }
    if (use_dir) save_poly_file(result, (fs::path(opts.workdir) / "result.poly").string());
    return result;
}

MultiPoly combinatorial_factor(const std::vector<MultiPoly>& candidates, const SeriesReference& ref,
                               int match_order) {
    std::vector<int> vals;
    std::vector<size_t> matches;
    for (size_t i = 0; i < candidates.size(); ++i) {
        int v = residual_valuation(candidates[i], ref.coeffs, ref.series_var, ref.expansion_var,
                                   match_order);
        vals.push_back(v);
        if (v >= match_order) matches.push_back(i);
    }
    if (matches.size() == 1) return candidates[matches[0]];
    std::ostringstream os;
    os << "combinatorial_factor: " << matches.size() << " candidates match to order " << match_order
       << "; residual valuations:";
    for (size_t i = 0; i < vals.size(); ++i) os << " [" << i << "]=" << vals[i];
    throw std::domain_error(os.str());
}

}  // namespace qp
