#include "qp/polysystem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qp {

std::vector<std::string> PolySystem::all_vars() const {
    std::vector<std::string> v = params;
    v.insert(v.end(), unknowns.begin(), unknowns.end());
    return v;
}

void PolySystem::validate() const {
    if (params.empty()) throw std::invalid_argument("PolySystem: no expansion variable");
    if (constraints.size() != targets.size())
        throw std::invalid_argument("PolySystem: constraint/target count mismatch");
    auto av = all_vars();
    for (const auto& c : constraints)
        if (c.vars != av) throw std::invalid_argument("PolySystem: constraint variable list mismatch");
    for (const auto& t : targets)
        if (std::find(unknowns.begin(), unknowns.end(), t) == unknowns.end())
            throw std::invalid_argument("PolySystem: target " + t + " is not an unknown");
    for (const auto& [k, v] : seeds)
        if (std::find(unknowns.begin(), unknowns.end(), k) == unknowns.end())
            throw std::invalid_argument("PolySystem: seed variable " + k + " is not an unknown");
    for (const auto& u : unknowns) {
        bool appears = false;
        for (const auto& c : constraints) {
            int idx = c.var_index(u);
            if (idx >= 0 && c.degree(idx) > 0) { appears = true; break; }
        }
        if (!appears) throw std::invalid_argument("PolySystem: unknown " + u + " appears in no constraint");
    }
}

PolySystem parse_system_text(const std::string& text) {
    PolySystem sys;
    std::istringstream is(text);
    std::string line;
    std::string pending;  // accumulated polynomial block
    auto flush_poly = [&]() {
        if (pending.find("vars:") != std::string::npos) {
            sys.constraints.push_back(parse_canonical_text(pending));
        }
        pending.clear();
    };
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) { flush_poly(); continue; }
        if (tok == "system:") { ls >> sys.name; continue; }
        if (tok == "unknowns:") {
            std::string v;
            while (ls >> v) sys.unknowns.push_back(v);
            continue;
        }
        if (tok == "params:") {
            std::string v;
            while (ls >> v) sys.params.push_back(v);
            continue;
        }
        if (tok == "targets:") {
            std::string v;
            while (ls >> v) sys.targets.push_back(v);
            continue;
        }
        if (tok == "seed:") {
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("system parse: bad seed " + kv);
                std::string num = kv.substr(eq + 1);
                auto slash = num.find('/');
                Rational val = slash == std::string::npos
                                   ? Rational(bigint_from_string(num))
                                   : make_rational(bigint_from_string(num.substr(0, slash)),
                                                   bigint_from_string(num.substr(slash + 1)));
                sys.seeds[kv.substr(0, eq)] = val;
            }
            continue;
        }
        pending += line + "\n";
    }
    flush_poly();
    sys.validate();
    return sys;
}

PolySystem load_system_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open system file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_system_text(ss.str());
}

std::string to_system_text(const PolySystem& sys) {
    std::ostringstream os;
    os << "system: " << sys.name << "\n";
    os << "unknowns:";
    for (const auto& u : sys.unknowns) os << " " << u;
    os << "\nparams:";
    for (const auto& p : sys.params) os << " " << p;
    os << "\nseed:";
    for (const auto& [k, v] : sys.seeds) os << " " << k << "=" << to_string(v);
    os << "\ntargets:";
    for (const auto& t : sys.targets) os << " " << t;
    os << "\n";
    for (const auto& c : sys.constraints) os << "\n" << to_canonical_text(c);
    return os.str();
}

namespace {

// Horner evaluation plan: split on unknown variables (outer levels), leaves
// are polynomials in the params alone and turn directly into series.
template <typename K>
struct PlanNode {
    int var = -1;  // constraint-var index of the split unknown; -1 = leaf
    std::vector<PlanNode<K>> coeffs;
    std::vector<K> leaf;  // coefficient per power of the expansion variable
};

template <typename K>
struct EvalContext {
    int x_var = 0;
    std::vector<int> unknown_vars;
    std::vector<K> pin_values;
    std::vector<char> pinned;
};

template <typename K>
PlanNode<K> build_plan(const MultiPoly& p, size_t next_unknown, const EvalContext<K>& ctx) {
    for (size_t ui = next_unknown; ui < ctx.unknown_vars.size(); ++ui) {
        int v = ctx.unknown_vars[ui];
        if (p.degree(v) > 0) {
            PlanNode<K> node;
            node.var = v;
            for (const auto& c : p.coeffs_along(v)) node.coeffs.push_back(build_plan(c, ui + 1, ctx));
            return node;
        }
    }
    PlanNode<K> node;
    for (const auto& [e, coef] : p.terms) {
        K val = K(Rational(coef));
        for (size_t i = 0; i < e.size(); ++i) {
            if (static_cast<int>(i) == ctx.x_var || e[i] == 0) continue;
            if (!ctx.pinned[i]) throw std::invalid_argument("system eval: unpinned parameter in leaf");
            for (unsigned k = 0; k < e[i]; ++k) val = val * ctx.pin_values[i];
        }
        size_t xp = e[ctx.x_var];
        if (node.leaf.size() <= xp) node.leaf.resize(xp + 1, K(Rational(0)));
        node.leaf[xp] += val;
    }
    return node;
}

template <typename K>
TSeries<K> eval_plan(const PlanNode<K>& node, const std::vector<TSeries<K>>& values,
                     const std::vector<int>& var_to_unknown, int order) {
    if (node.var < 0) {
        TSeries<K> s(order);
        for (int i = 0; i < order && i < static_cast<int>(node.leaf.size()); ++i) s[i] = node.leaf[i];
        return s;
    }
    const TSeries<K>& v = values[var_to_unknown[node.var]];
    TSeries<K> acc(order);
    bool acc_nonzero = false;
    for (size_t k = node.coeffs.size(); k-- > 0;) {
        if (acc_nonzero) acc = acc * v.truncated(order);
        TSeries<K> c = eval_plan(node.coeffs[k], values, var_to_unknown, order);
        for (int i = 0; i < order; ++i) acc[i] += c[i];
        if (!acc_nonzero) acc_nonzero = acc.valuation() < acc.order();
    }
    return acc;
}

template <typename K>
std::map<std::string, TSeries<K>> solve_impl(const PolySystem& sys, int order,
                                             const std::vector<K>& pin_values,
                                             const std::vector<char>& pinned) {
    sys.validate();
    auto vars = sys.all_vars();
    size_t nu = sys.unknowns.size();

    EvalContext<K> ctx;
    ctx.x_var = 0;
    ctx.pin_values = pin_values;
    ctx.pinned = pinned;
    for (size_t i = 0; i < nu; ++i) ctx.unknown_vars.push_back(static_cast<int>(sys.params.size() + i));
    std::vector<int> var_to_unknown(vars.size(), -1);
    for (size_t i = 0; i < nu; ++i) var_to_unknown[sys.params.size() + i] = static_cast<int>(i);

    std::vector<int> target_idx(sys.constraints.size());
    for (size_t i = 0; i < sys.constraints.size(); ++i)
        target_idx[i] = static_cast<int>(
            std::find(sys.unknowns.begin(), sys.unknowns.end(), sys.targets[i]) - sys.unknowns.begin());

    std::vector<PlanNode<K>> plans, dplans;
    for (size_t i = 0; i < sys.constraints.size(); ++i) {
        plans.push_back(build_plan(sys.constraints[i], 0, ctx));
        MultiPoly d = sys.constraints[i].derivative(ctx.unknown_vars[target_idx[i]]);
        dplans.push_back(build_plan(d, 0, ctx));
    }

    int slack = 8;
    for (int attempt = 0; attempt < 3; ++attempt, slack *= 2) {
        int W = order + slack;
        std::vector<TSeries<K>> values(nu, TSeries<K>(W));
        for (size_t i = 0; i < nu; ++i) {
            auto it = sys.seeds.find(sys.unknowns[i]);
            if (it != sys.seeds.end() && W > 0) values[i][0] = K(it->second);
        }

        bool attempt_failed = false;
        std::vector<int> levels;
        for (int L = std::min(8, W); L < W; L *= 2) levels.push_back(L);
        levels.push_back(W);

        for (int L : levels) {
            int max_sweeps = 2 * L + 24;
            bool level_done = false;
            for (int sweep = 0; sweep < max_sweeps && !level_done; ++sweep) {
                bool all_ok = true;
                for (size_t i = 0; i < sys.constraints.size(); ++i) {
                    TSeries<K> E = eval_plan(plans[i], values, var_to_unknown, L);
                    int ve = E.valuation();
                    if (ve >= L) continue;
                    all_ok = false;
                    TSeries<K> J = eval_plan(dplans[i], values, var_to_unknown, L);
                    int om = J.valuation();
                    if (om >= L)
                        throw std::domain_error("solve_system_series: singular step for unknown " +
                                                sys.targets[i] + " at order " + std::to_string(ve) +
                                                " (no fallback)");
                    if (ve < om)
                        throw std::domain_error("solve_system_series: no solution at order " +
                                                std::to_string(ve) + " for constraint " +
                                                std::to_string(i) + " of " + sys.name);
                    TSeries<K> delta = divide(E, J);
                    TSeries<K>& tgt = values[target_idx[i]];
                    for (int k = 0; k < delta.order(); ++k) tgt[k] -= delta[k];
                }
                level_done = all_ok;
            }
            if (!level_done) { attempt_failed = true; break; }
        }
        if (attempt_failed) continue;

        std::map<std::string, TSeries<K>> out;
        for (size_t i = 0; i < nu; ++i) out[sys.unknowns[i]] = values[i].truncated(order);
        return out;
    }
    throw std::domain_error("solve_system_series: failed to reach a fixed point for system " + sys.name);
}

}  // namespace

std::map<std::string, SeriesQ> solve_system_series(const PolySystem& sys, int order,
                                                   const std::map<std::string, Rational>& pins) {
    auto vars = sys.all_vars();
    std::vector<Rational> pin_values(vars.size(), Rational(0));
    std::vector<char> pinned(vars.size(), 0);
    for (size_t i = 1; i < sys.params.size(); ++i) {
        auto it = pins.find(sys.params[i]);
        if (it == pins.end())
            throw std::invalid_argument("solve_system_series: parameter " + sys.params[i] +
                                        " must be pinned");
        pin_values[i] = it->second;
        pinned[i] = 1;
    }
    return solve_impl<Rational>(sys, order, pin_values, pinned);
}

std::map<std::string, SeriesF> solve_system_series_sym(const PolySystem& sys, int order) {
    if (sys.params.size() != 2)
        throw std::invalid_argument("solve_system_series_sym: exactly one symbolic parameter expected");
    auto vars = sys.all_vars();
    std::vector<RatFunc> pin_values(vars.size(), RatFunc());
    std::vector<char> pinned(vars.size(), 0);
    pin_values[1] = RatFunc::generator();
    pinned[1] = 1;
    return solve_impl<RatFunc>(sys, order, pin_values, pinned);
}

}  // namespace qp
