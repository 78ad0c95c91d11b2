#include "mdbell/bound_search.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace mdbell {

namespace {

struct UnionFind {
    std::array<int, 8> parent{};

    UnionFind() {
        for (int i = 0; i < 8; ++i)
            parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

int context_index(const Context& ctx) {
    return 4 * *ctx.x + 2 * *ctx.y + *ctx.z;
}

// The ns2 pair-context terms with the full context each block is tied to
// (its lexicographically least extension).
struct Ns2PairTerm {
    Context pair;
    Context tie_target;
};

const std::array<Ns2PairTerm, 3>& ns2_pair_terms() {
    static const std::array<Ns2PairTerm, 3> terms = {{
        {Context::pair_xy(0, 0), Context::full(0, 0, 0)},
        {Context::pair_xz(0, 0), Context::full(0, 0, 0)},
        {Context::pair_yz(0, 1), Context::full(0, 0, 1)},
    }};
    return terms;
}

std::string strategy_text(const ResponseTable& strategy) {
    std::ostringstream out;
    out << "pairing " << to_string(strategy.pairing);
    for (const auto& row : strategy.rows) {
        out << "\n ";
        for (int v : row)
            out << ' ' << (v > 0 ? "+1" : "-1");
    }
    return out.str();
}

} // namespace

LpSolution lp_max_s_solution(const ResponseTable& strategy, InequalityKind kind,
                             const RelaxationScenario& scenario, const LpOptions& options) {
    if (strategy.rows.empty())
        throw Error("strategy has no rows");
    if (kind == InequalityKind::NS2_99 && strategy.pairing != Pairing::FullyLocal)
        throw Error("the ns2 linear program requires a fully local strategy");
    const std::size_t l = strategy.rows.size();

    UnionFind uf;
    if (kind == InequalityKind::NS2_99 && options.tie_pair_blocks)
        for (int idx : {1, 2, 5})
            uf.merge(idx, 0);

    std::vector<std::pair<MeasureId, Rational>> effective;
    for (const auto& [id, m] : scenario.budgets) {
        if (m < 0)
            throw Error("budget for " + to_string(id) + " must be nonnegative, got " +
                        to_string(m));
        if (m >= 2)
            continue;
        if (m == 0) {
            for (const auto& [c1, c2] : measure_pairs(id))
                uf.merge(context_index(c1), context_index(c2));
        } else {
            effective.emplace_back(id, m);
        }
    }

    std::array<int, 8> column_of{};
    std::vector<int> roots;
    for (int i = 0; i < 8; ++i) {
        const int r = uf.find(i);
        if (std::find(roots.begin(), roots.end(), r) == roots.end())
            roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    for (int i = 0; i < 8; ++i)
        column_of[i] = static_cast<int>(std::find(roots.begin(), roots.end(), uf.find(i)) -
                                        roots.begin());
    const bool untied_blocks = kind == InequalityKind::NS2_99 && !options.tie_pair_blocks;
    const std::size_t n_prob_cols = roots.size() + (untied_blocks ? 3 : 0);

    std::vector<std::tuple<int, int, Rational>> budget_pairs;
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& [id, m] : effective) {
        for (const auto& [c1, c2] : measure_pairs(id)) {
            const int a = column_of[context_index(c1)];
            const int b = column_of[context_index(c2)];
            if (a == b)
                continue;
            if (seen.emplace(std::min(a, b), std::max(a, b), static_cast<int>(id)).second)
                budget_pairs.emplace_back(a, b, m);
        }
    }

    std::vector<std::vector<Rational>> objective_cols(n_prob_cols,
                                                      std::vector<Rational>(l, Rational(0)));
    for (const InequalityTerm& term : inequality_spec(kind).terms) {
        if (term.context.is_full()) {
            const int col = column_of[context_index(term.context)];
            for (std::size_t lam = 0; lam < l; ++lam)
                objective_cols[col][lam] +=
                    term.sign * strategy.full_product(lam, term.context);
        }
    }
    if (kind == InequalityKind::NS2_99) {
        const auto& pair_terms = ns2_pair_terms();
        for (std::size_t j = 0; j < pair_terms.size(); ++j) {
            const int col = untied_blocks
                                ? static_cast<int>(roots.size() + j)
                                : column_of[context_index(pair_terms[j].tie_target)];
            for (std::size_t lam = 0; lam < l; ++lam)
                objective_cols[col][lam] += *strategy.pair_product(lam, pair_terms[j].pair);
        }
    }

    const std::size_t prob_vars = n_prob_cols * l;
    const std::size_t total_vars = prob_vars + budget_pairs.size() * l;
    LinearProgram lp;
    lp.objective.assign(total_vars, Rational(0));
    for (std::size_t col = 0; col < n_prob_cols; ++col)
        for (std::size_t lam = 0; lam < l; ++lam)
            lp.objective[col * l + lam] = objective_cols[col][lam];

    auto add_row = [&lp, total_vars](LpSense sense, const Rational& rhs) -> std::vector<Rational>& {
        lp.rows.push_back({std::vector<Rational>(total_vars, Rational(0)), sense, rhs});
        return lp.rows.back().coeffs;
    };
    for (std::size_t col = 0; col < n_prob_cols; ++col) {
        auto& coeffs = add_row(LpSense::Eq, Rational(1));
        for (std::size_t lam = 0; lam < l; ++lam)
            coeffs[col * l + lam] = 1;
    }
    for (std::size_t k = 0; k < budget_pairs.size(); ++k) {
        const auto& [a, b, m] = budget_pairs[k];
        const std::size_t t_base = prob_vars + k * l;
        for (std::size_t lam = 0; lam < l; ++lam) {
            for (int sign : {+1, -1}) {
                auto& coeffs = add_row(LpSense::LessEq, Rational(0));
                coeffs[static_cast<std::size_t>(a) * l + lam] = sign;
                coeffs[static_cast<std::size_t>(b) * l + lam] = -sign;
                coeffs[t_base + lam] = -1;
            }
        }
        auto& coeffs = add_row(LpSense::LessEq, m);
        for (std::size_t lam = 0; lam < l; ++lam)
            coeffs[t_base + lam] = 1;
    }

    LpSolution sol = simplex_solve(lp, options.mode);
    if (sol.status != LpStatus::Optimal)
        throw Error("strategy linear program did not converge");
    return sol;
}

Rational lp_max_s(const ResponseTable& strategy, InequalityKind kind,
                  const RelaxationScenario& scenario, const LpOptions& options) {
    LpOptions exact = options;
    exact.mode = NumericMode::Exact;
    return lp_max_s_solution(strategy, kind, scenario, exact).value;
}

std::string BoundCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["inequality"] = mdbell::to_string(kind);
    j["scenario"] = scenario.to_string();
    nlohmann::ordered_json jb = nlohmann::ordered_json::object();
    for (const auto& [id, m] : scenario.budgets)
        jb[mdbell::to_string(id)] = to_string(m);
    j["budgets"] = jb;
    if (lp_value_is_exact)
        j["lp_max_S"] = to_string(lp_value);
    else
        j["lp_max_S"] = nullptr;
    j["lp_max_S_real"] = lp_value_real;
    j["bound"] = to_string(bound);
    j["sound"] = sound;
    j["tight"] = tight;
    nlohmann::ordered_json js;
    js["pairing"] = to_string(strategy.pairing);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : strategy.rows)
        rows.push_back(std::vector<int>(row.begin(), row.end()));
    js["rows"] = rows;
    j["strategy"] = js;
    return j.dump();
}

BoundCertificate certify_strategy(const ResponseTable& strategy, InequalityKind kind,
                                  const RelaxationScenario& scenario,
                                  const LpOptions& options) {
    BoundCertificate cert;
    cert.strategy = strategy;
    cert.kind = kind;
    cert.scenario = scenario;
    cert.bound = relaxed_bound(kind, scenario);
    const LpSolution sol = lp_max_s_solution(strategy, kind, scenario, options);
    cert.lp_value_real = sol.value_real;
    if (sol.exact) {
        cert.lp_value = sol.value;
        cert.lp_value_is_exact = true;
        cert.sound = sol.value <= cert.bound;
        cert.tight = sol.value == cert.bound;
    } else {
        const double bound_real = to_double(cert.bound);
        cert.sound = sol.value_real <= bound_real + 1e-9;
        cert.tight = std::abs(sol.value_real - bound_real) <= 1e-9;
    }
    return cert;
}

namespace {

const std::vector<std::array<int, 6>>& all_rows_sorted() {
    static const std::vector<std::array<int, 6>> rows = [] {
        std::vector<std::array<int, 6>> out;
        for (int code = 0; code < 64; ++code) {
            std::array<int, 6> r{};
            for (int j = 0; j < 6; ++j)
                r[j] = (code >> (5 - j)) & 1 ? -1 : 1;
            out.push_back(r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return rows;
}

void for_each_multiset(int l, const std::function<void(const std::vector<std::array<int, 6>>&)>& visit) {
    const auto& rows = all_rows_sorted();
    std::vector<std::array<int, 6>> pick;
    auto recurse = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            visit(pick);
            return;
        }
        for (std::size_t i = from; i < rows.size(); ++i) {
            pick.push_back(rows[i]);
            self(self, i, remaining - 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0, l);
}

std::vector<std::array<int, 2>> joint_flips() {
    return {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
}

std::vector<std::array<int, 6>> apply_flip_fl(const std::vector<std::array<int, 6>>& rows,
                                              int sa, int sb, int sc) {
    std::vector<std::array<int, 6>> out = rows;
    for (auto& r : out) {
        r[0] *= sa; r[1] *= sa;
        r[2] *= sb; r[3] *= sb;
        r[4] *= sc; r[5] *= sc;
    }
    return out;
}

std::vector<std::array<int, 6>> apply_flip_joint(const std::vector<std::array<int, 6>>& rows,
                                                 int su, int sw) {
    std::vector<std::array<int, 6>> out = rows;
    for (auto& r : out) {
        r[0] *= su; r[1] *= su; r[2] *= su; r[3] *= su;
        r[4] *= sw; r[5] *= sw;
    }
    return out;
}

} // namespace

ResponseTable canonical_strategy(const ResponseTable& strategy, bool flip_quotient) {
    std::vector<std::array<int, 6>> best = strategy.rows;
    std::sort(best.begin(), best.end());
    if (flip_quotient) {
        if (strategy.pairing == Pairing::FullyLocal) {
            for (int sa : {+1, -1})
                for (int sb : {+1, -1})
                    for (int sc : {+1, -1}) {
                        auto candidate = apply_flip_fl(strategy.rows, sa, sb, sc);
                        std::sort(candidate.begin(), candidate.end());
                        if (candidate < best)
                            best = candidate;
                    }
        } else {
            for (const auto& [su, sw] : joint_flips()) {
                auto candidate = apply_flip_joint(strategy.rows, su, sw);
                std::sort(candidate.begin(), candidate.end());
                if (candidate < best)
                    best = candidate;
            }
        }
    }
    ResponseTable out;
    out.pairing = strategy.pairing;
    out.rows = std::move(best);
    return out;
}

StrategyEnumeration enumerate_strategies(Pairing pairing, int l, bool flip_quotient) {
    if (l < 1 || l > 3)
        throw Error("strategy enumeration supports l in {1, 2, 3}, got " + std::to_string(l));
    StrategyEnumeration result;
    result.raw_count = std::uint64_t(1) << (6 * l);
    for_each_multiset(l, [&](const std::vector<std::array<int, 6>>& rows) {
        ResponseTable strategy;
        strategy.pairing = pairing;
        strategy.rows = rows;
        if (flip_quotient && canonical_strategy(strategy, true).rows != rows)
            return;
        result.strategies.push_back(std::move(strategy));
    });
    return result;
}

namespace {

// Per-row signed objective coefficients: these determine the whole linear
// program for a fixed inequality and budget set, so strategies sharing the
// sorted multiset of them share one LP.
std::vector<std::vector<int>> strategy_signature(const ResponseTable& strategy,
                                                 InequalityKind kind) {
    std::vector<std::vector<int>> sig;
    for (std::size_t lam = 0; lam < strategy.rows.size(); ++lam) {
        std::vector<int> tuple;
        if (kind == InequalityKind::NS2_99) {
            const auto& r = strategy.rows[lam];
            tuple = {r[0] * r[2] + r[0] * r[4] + r[2] * r[5], -(r[1] * r[3] * r[4]),
                     r[1] * r[3] * r[5]};
        } else {
            for (const InequalityTerm& term : inequality_spec(kind).terms)
                tuple.push_back(term.sign * strategy.full_product(lam, term.context));
        }
        sig.push_back(std::move(tuple));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

std::vector<MeasureId> family_of(ScenarioShape shape) {
    if (shape == ScenarioShape::OneSided)
        return {MeasureId::M1, MeasureId::M2, MeasureId::M3};
    return {MeasureId::M12, MeasureId::M23, MeasureId::M13};
}

// Tightest applicable closed-form bound at equal budgets m for the family.
Rational gate_bound(InequalityKind kind, ScenarioShape shape, const Rational& m) {
    std::map<MeasureId, Rational> budgets;
    for (MeasureId id : family_of(shape))
        budgets.emplace(id, m);
    Rational best = inequality_spec(kind).algebraic_max;
    if (shape == ScenarioShape::OneSided) {
        for (Party party : {Party::A, Party::B, Party::C})
            best = std::min(best, relaxed_bound(kind, RelaxationScenario::one_sided(party, budgets)));
    } else {
        for (PartyPair pair : {PartyPair::AB, PartyPair::BC, PartyPair::AC})
            best = std::min(best,
                            relaxed_bound(kind, RelaxationScenario::bipartite(pair, budgets)));
    }
    return best;
}

[[noreturn]] void throw_violation(InequalityKind kind, ScenarioShape shape, const Rational& m,
                                  const Rational& value, const Rational& bound,
                                  const ResponseTable& strategy) {
    throw Error("relaxed bound violated for " + to_string(kind) + " " +
                (shape == ScenarioShape::OneSided ? std::string("one-sided")
                                                  : std::string("bipartite")) +
                " at budget " + to_string(m) + ": lp max " + to_string(value) + " > bound " +
                to_string(bound) + "; strategy:\n" + strategy_text(strategy));
}

} // namespace

std::string SoundnessSummary::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["inequality"] = mdbell::to_string(kind);
    j["shape"] = shape == ScenarioShape::OneSided ? "one-sided" : "bipartite";
    j["L"] = l;
    j["strategies_enumerated"] = strategies_enumerated;
    j["lp_count"] = lp_count;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const SoundnessPoint& p : points) {
        nlohmann::ordered_json jp;
        jp["budget"] = to_string(p.budget);
        jp["max_s"] = to_string(p.max_s);
        jp["bound"] = to_string(p.bound);
        jp["attained"] = p.attained;
        pts.push_back(jp);
    }
    j["points"] = pts;
    return j.dump();
}

std::string SoundnessSummary::to_csv() const {
    std::ostringstream out;
    out << "budget,max_s,bound,attained\n";
    for (const SoundnessPoint& p : points)
        out << to_string(p.budget) << ',' << to_string(p.max_s) << ',' << to_string(p.bound)
            << ',' << (p.attained ? "true" : "false") << '\n';
    return out.str();
}

SoundnessSummary verify_bound_soundness(InequalityKind kind, ScenarioShape shape, int l,
                                        const std::vector<Rational>& budget_grid,
                                        const LpOptions& options) {
    if (kind == InequalityKind::NS2_99 && shape == ScenarioShape::Bipartite)
        throw Error("the ns2 inequality has no bipartite relaxed bound");
    SoundnessSummary summary;
    summary.kind = kind;
    summary.shape = shape;
    summary.l = l;

    std::map<std::vector<std::vector<int>>, ResponseTable> representatives;
    const StrategyEnumeration enumeration = enumerate_strategies(Pairing::FullyLocal, l, false);
    for (const ResponseTable& strategy : enumeration.strategies)
        representatives.emplace(strategy_signature(strategy, kind), strategy);
    summary.strategies_enumerated = representatives.size();

    const std::vector<MeasureId> family = family_of(shape);
    for (const Rational& m : budget_grid) {
        if (m < 0)
            throw Error("budget grid values must be nonnegative, got " + to_string(m));
        std::map<MeasureId, Rational> budgets;
        for (MeasureId id : family)
            budgets.emplace(id, m);
        const RelaxationScenario scenario = RelaxationScenario::one_sided(Party::A, budgets);
        const Rational bound = gate_bound(kind, shape, m);

        SoundnessPoint point;
        point.budget = m;
        point.bound = bound;

        if (options.mode == NumericMode::Exact) {
            bool first = true;
            for (const auto& [sig, strategy] : representatives) {
                const LpSolution sol = lp_max_s_solution(strategy, kind, scenario, options);
                ++summary.lp_count;
                if (sol.value > bound)
                    throw_violation(kind, shape, m, sol.value, bound, strategy);
                if (first || sol.value > point.max_s) {
                    point.max_s = sol.value;
                    first = false;
                }
            }
        } else {
            const double bound_real = to_double(bound);
            std::vector<double> values;
            values.reserve(representatives.size());
            double best_real = -1e300;
            for (const auto& [sig, strategy] : representatives) {
                const LpSolution sol = lp_max_s_solution(strategy, kind, scenario, options);
                ++summary.lp_count;
                values.push_back(sol.value_real);
                best_real = std::max(best_real, sol.value_real);
            }
            // Re-solve every near-extremal or near-violating candidate
            // exactly so reported values and verdicts stay exact.
            const double threshold = std::min(best_real, bound_real) - 1e-6;
            LpOptions exact = options;
            exact.mode = NumericMode::Exact;
            bool first = true;
            std::size_t index = 0;
            for (const auto& [sig, strategy] : representatives) {
                if (values[index++] < threshold)
                    continue;
                const LpSolution sol = lp_max_s_solution(strategy, kind, scenario, exact);
                ++summary.lp_count;
                if (sol.value > bound)
                    throw_violation(kind, shape, m, sol.value, bound, strategy);
                if (first || sol.value > point.max_s) {
                    point.max_s = sol.value;
                    first = false;
                }
            }
        }
        point.attained = point.max_s == point.bound;
        summary.points.push_back(point);
    }
    return summary;
}

} // namespace mdbell
