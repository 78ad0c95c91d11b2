#include "mdbell/dependence.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace mdbell {

std::string to_string(Party party) {
    switch (party) {
    case Party::A: return "A";
    case Party::B: return "B";
    case Party::C: return "C";
    }
    throw Error("invalid party");
}

std::string to_string(PartyPair pair) {
    switch (pair) {
    case PartyPair::AB: return "AB";
    case PartyPair::BC: return "BC";
    case PartyPair::AC: return "AC";
    }
    throw Error("invalid party pair");
}

std::string to_string(MeasureId id) {
    switch (id) {
    case MeasureId::M: return "M";
    case MeasureId::M1: return "M1";
    case MeasureId::M2: return "M2";
    case MeasureId::M3: return "M3";
    case MeasureId::M12: return "M12";
    case MeasureId::M23: return "M23";
    case MeasureId::M13: return "M13";
    }
    throw Error("invalid measure id");
}

MeasureId parse_measure(std::string_view text) {
    if (text == "M") return MeasureId::M;
    if (text == "M1") return MeasureId::M1;
    if (text == "M2") return MeasureId::M2;
    if (text == "M3") return MeasureId::M3;
    if (text == "M12") return MeasureId::M12;
    if (text == "M23") return MeasureId::M23;
    if (text == "M13") return MeasureId::M13;
    throw Error("not a measure name: '" + std::string(text) + "'");
}

MeasureId one_sided_measure(Party party) {
    switch (party) {
    case Party::A: return MeasureId::M1;
    case Party::B: return MeasureId::M2;
    case Party::C: return MeasureId::M3;
    }
    throw Error("invalid party");
}

MeasureId bipartite_measure(PartyPair pair) {
    switch (pair) {
    case PartyPair::AB: return MeasureId::M12;
    case PartyPair::BC: return MeasureId::M23;
    case PartyPair::AC: return MeasureId::M13;
    }
    throw Error("invalid party pair");
}

namespace {

using ContextPair = std::pair<Context, Context>;

std::vector<ContextPair> build_pairs(MeasureId id) {
    std::vector<ContextPair> out;
    switch (id) {
    case MeasureId::M1:
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                out.emplace_back(Context::full(0, y, z), Context::full(1, y, z));
        break;
    case MeasureId::M2:
        for (int x = 0; x < 2; ++x)
            for (int z = 0; z < 2; ++z)
                out.emplace_back(Context::full(x, 0, z), Context::full(x, 1, z));
        break;
    case MeasureId::M3:
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                out.emplace_back(Context::full(x, y, 0), Context::full(x, y, 1));
        break;
    case MeasureId::M12:
        for (int z = 0; z < 2; ++z) {
            out.emplace_back(Context::full(0, 0, z), Context::full(1, 1, z));
            out.emplace_back(Context::full(0, 1, z), Context::full(1, 0, z));
        }
        break;
    case MeasureId::M23:
        for (int x = 0; x < 2; ++x) {
            out.emplace_back(Context::full(x, 0, 0), Context::full(x, 1, 1));
            out.emplace_back(Context::full(x, 0, 1), Context::full(x, 1, 0));
        }
        break;
    case MeasureId::M13:
        for (int y = 0; y < 2; ++y) {
            out.emplace_back(Context::full(0, y, 0), Context::full(1, y, 1));
            out.emplace_back(Context::full(1, y, 0), Context::full(0, y, 1));
        }
        break;
    case MeasureId::M: {
        const auto& all = all_full_contexts();
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                out.emplace_back(all[i], all[j]);
        break;
    }
    }
    return out;
}

} // namespace

const std::vector<ContextPair>& measure_pairs(MeasureId id) {
    static const std::array<std::vector<ContextPair>, 7> tables = {
        build_pairs(MeasureId::M),   build_pairs(MeasureId::M1),
        build_pairs(MeasureId::M2),  build_pairs(MeasureId::M3),
        build_pairs(MeasureId::M12), build_pairs(MeasureId::M23),
        build_pairs(MeasureId::M13),
    };
    return tables[static_cast<std::size_t>(id)];
}

Rational l1_distance(const std::vector<Rational>& u, const std::vector<Rational>& v) {
    if (u.size() != v.size())
        throw Error("L1 distance requires vectors of equal length");
    Rational total = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        total += boost::multiprecision::abs(u[i] - v[i]);
    return total;
}

std::optional<Rational> measure_value(const Model& model, MeasureId id) {
    std::optional<Rational> best;
    for (const auto& [c1, c2] : measure_pairs(id)) {
        if (!model.distributions.has(c1) || !model.distributions.has(c2))
            continue;
        Rational d = l1_distance(model.distributions.at(c1), model.distributions.at(c2));
        if (!best || d > *best)
            best = d;
    }
    return best;
}

std::optional<Rational> measure_one_sided(const Model& model, Party party) {
    return measure_value(model, one_sided_measure(party));
}

std::optional<Rational> measure_bipartite(const Model& model, PartyPair pair) {
    return measure_value(model, bipartite_measure(pair));
}

std::optional<Rational> measure_overall(const Model& model) {
    return measure_value(model, MeasureId::M);
}

Rational freedom(const Rational& m) {
    if (m < 0 || m > 2)
        throw Error("freedom is defined for dependence in [0, 2], got " + to_string(m));
    return Rational(1) - m / 2;
}

std::string DependenceReport::to_json() const {
    nlohmann::ordered_json j;
    auto put_measure = [&j](const char* key, const std::optional<Rational>& value) {
        if (value)
            j[key] = to_string(*value);
        else
            j[key] = nullptr;
    };
    auto put_freedom = [&j](const char* key, const std::optional<Rational>& value) {
        if (value)
            j[key] = to_string(freedom(*value));
        else
            j[key] = nullptr;
    };
    put_measure("M", overall);
    put_measure("M1", one_sided[0]);
    put_measure("M2", one_sided[1]);
    put_measure("M3", one_sided[2]);
    put_measure("M12", bipartite[0]);
    put_measure("M23", bipartite[1]);
    put_measure("M13", bipartite[2]);
    put_freedom("F", overall);
    put_freedom("F1", one_sided[0]);
    put_freedom("F2", one_sided[1]);
    put_freedom("F3", one_sided[2]);
    put_freedom("F12", bipartite[0]);
    put_freedom("F23", bipartite[1]);
    put_freedom("F13", bipartite[2]);
    j["lower_bound_only"] = lower_bound_only;
    return j.dump();
}

DependenceReport dependence_report(const Model& model) {
    DependenceReport report;
    report.overall = measure_overall(model);
    report.one_sided = {measure_value(model, MeasureId::M1), measure_value(model, MeasureId::M2),
                        measure_value(model, MeasureId::M3)};
    report.bipartite = {measure_value(model, MeasureId::M12), measure_value(model, MeasureId::M23),
                        measure_value(model, MeasureId::M13)};
    report.lower_bound_only = !is_complete(model);
    return report;
}

namespace {

// Converts a double exactly to a rational (doubles are dyadic rationals),
// then clamps to [0, 1] so a near-feasible numeric solution yields a valid
// probability column.
Rational rational_from_double(double v) {
    if (v <= 0)
        return Rational(0);
    if (v >= 1)
        return Rational(1);
    Rational r(v);
    return r;
}

} // namespace

CompletionResult complete_contexts(const Model& model,
                                   const std::vector<std::pair<MeasureId, Rational>>& budgets,
                                   NumericMode mode) {
    const std::size_t rows = model.responses.size();

    // Tightest budget per unordered context pair; vacuous budgets (m >= 2,
    // the largest possible L1 distance between probability vectors) drop out.
    std::map<ContextPair, Rational> pair_budget;
    for (const auto& [id, m] : budgets) {
        if (m < 0)
            return {};
        if (m >= 2)
            continue;
        for (const auto& p : measure_pairs(id)) {
            auto [it, inserted] = pair_budget.emplace(p, m);
            if (!inserted && m < it->second)
                it->second = m;
        }
    }

    std::vector<Context> missing;
    for (const Context& c : all_full_contexts())
        if (!model.distributions.has(c))
            missing.push_back(c);

    std::map<Context, std::size_t> var_base;
    for (std::size_t i = 0; i < missing.size(); ++i)
        var_base.emplace(missing[i], i * rows);
    const std::size_t prob_vars = missing.size() * rows;

    // Pairs with both contexts present are decided directly; the rest need
    // auxiliary variables t_lambda with |rho1 - rho2| <= t and sum t <= m.
    std::vector<std::pair<ContextPair, Rational>> lp_pairs;
    for (const auto& [p, m] : pair_budget) {
        const bool p1 = model.distributions.has(p.first);
        const bool p2 = model.distributions.has(p.second);
        if (p1 && p2) {
            if (l1_distance(model.distributions.at(p.first), model.distributions.at(p.second)) > m)
                return {};
        } else {
            lp_pairs.emplace_back(p, m);
        }
    }

    if (missing.empty())
        return {true, model};

    const std::size_t total_vars = prob_vars + lp_pairs.size() * rows;
    LinearProgram lp;
    lp.objective.assign(total_vars, Rational(0));

    auto add_row = [&lp, total_vars](LpSense sense, const Rational& rhs) -> std::vector<Rational>& {
        lp.rows.push_back({std::vector<Rational>(total_vars, Rational(0)), sense, rhs});
        return lp.rows.back().coeffs;
    };

    for (const Context& c : missing) {
        auto& coeffs = add_row(LpSense::Eq, Rational(1));
        for (std::size_t k = 0; k < rows; ++k)
            coeffs[var_base.at(c) + k] = 1;
    }

    for (std::size_t pi = 0; pi < lp_pairs.size(); ++pi) {
        const auto& [p, m] = lp_pairs[pi];
        const std::size_t t_base = prob_vars + pi * rows;
        for (std::size_t k = 0; k < rows; ++k) {
            for (int sign : {+1, -1}) {
                Rational rhs = 0;
                auto& coeffs = add_row(LpSense::LessEq, Rational(0));
                auto place = [&](const Context& c, int s) {
                    if (model.distributions.has(c))
                        rhs -= Rational(s) * model.distributions.at(c)[k];
                    else
                        coeffs[var_base.at(c) + k] = s;
                };
                place(p.first, sign);
                place(p.second, -sign);
                coeffs[t_base + k] = -1;
                lp.rows.back().rhs = rhs;
            }
        }
        auto& coeffs = add_row(LpSense::LessEq, m);
        for (std::size_t k = 0; k < rows; ++k)
            coeffs[t_base + k] = 1;
    }

    LpSolution sol = simplex_solve(lp, mode);
    if (sol.status == LpStatus::Infeasible)
        return {};
    if (sol.status != LpStatus::Optimal)
        throw Error("completion linear program did not converge");

    std::map<Context, std::vector<Rational>> columns = model.distributions.columns;
    for (const Context& c : missing) {
        std::vector<Rational> col(rows);
        if (mode == NumericMode::Exact) {
            for (std::size_t k = 0; k < rows; ++k)
                col[k] = sol.x[var_base.at(c) + k];
        } else {
            Rational total = 0;
            for (std::size_t k = 0; k < rows; ++k) {
                col[k] = rational_from_double(sol.x_real[var_base.at(c) + k]);
                total += col[k];
            }
            if (total == 0) {
                for (std::size_t k = 0; k < rows; ++k)
                    col[k] = Rational(1) / Rational(static_cast<long>(rows));
            } else {
                for (std::size_t k = 0; k < rows; ++k)
                    col[k] /= total;
            }
        }
        columns.emplace(c, std::move(col));
    }

    CompletionResult result;
    result.feasible = true;
    result.witness = build_model(model.responses, ContextDistribution{std::move(columns)}, model.label);
    return result;
}

} // namespace mdbell
