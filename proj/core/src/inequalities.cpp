#include "mdbell/inequalities.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace mdbell {

std::string to_string(InequalityKind kind) {
    switch (kind) {
    case InequalityKind::Mermin: return "mermin";
    case InequalityKind::Svetlichny: return "svetlichny";
    case InequalityKind::NS2_99: return "ns2";
    }
    throw Error("invalid inequality kind");
}

InequalityKind parse_inequality(std::string_view text) {
    if (text == "mermin") return InequalityKind::Mermin;
    if (text == "svetlichny") return InequalityKind::Svetlichny;
    if (text == "ns2") return InequalityKind::NS2_99;
    throw Error("not an inequality name: '" + std::string(text) +
                "' (expected mermin, svetlichny, or ns2)");
}

namespace {

InequalitySpec make_spec(InequalityKind kind) {
    InequalitySpec spec;
    spec.kind = kind;
    switch (kind) {
    case InequalityKind::Mermin:
        spec.terms = {{Context::full(1, 0, 0), +1},
                      {Context::full(0, 1, 0), +1},
                      {Context::full(0, 0, 1), +1},
                      {Context::full(1, 1, 1), -1}};
        spec.classical_bound = 2;
        spec.algebraic_max = 4;
        spec.quantum_ghz_value = 4.0;
        break;
    case InequalityKind::Svetlichny:
        for (const Context& c : all_full_contexts()) {
            const int exponent = (*c.x) * (*c.y) + (*c.y) * (*c.z) + (*c.z) * (*c.x);
            spec.terms.push_back({c, exponent % 2 == 0 ? +1 : -1});
        }
        spec.classical_bound = 4;
        spec.algebraic_max = 8;
        spec.quantum_ghz_value = 4.0 * std::sqrt(2.0);
        break;
    case InequalityKind::NS2_99:
        spec.terms = {{Context::pair_xy(0, 0), +1},
                      {Context::pair_xz(0, 0), +1},
                      {Context::pair_yz(0, 1), +1},
                      {Context::full(1, 1, 0), -1},
                      {Context::full(1, 1, 1), +1}};
        spec.classical_bound = 3;
        spec.algebraic_max = 5;
        spec.quantum_ghz_value = 1.0 + 2.0 * std::sqrt(2.0);
        break;
    }
    return spec;
}

} // namespace

const InequalitySpec& inequality_spec(InequalityKind kind) {
    static const InequalitySpec mermin = make_spec(InequalityKind::Mermin);
    static const InequalitySpec svetlichny = make_spec(InequalityKind::Svetlichny);
    static const InequalitySpec ns2 = make_spec(InequalityKind::NS2_99);
    switch (kind) {
    case InequalityKind::Mermin: return mermin;
    case InequalityKind::Svetlichny: return svetlichny;
    case InequalityKind::NS2_99: return ns2;
    }
    throw Error("invalid inequality kind");
}

Rational evaluate(const Model& model, InequalityKind kind) {
    Rational s = 0;
    for (const InequalityTerm& term : inequality_spec(kind).terms)
        s += Rational(term.sign) * correlator(model, term.context);
    return s;
}

RelaxationScenario RelaxationScenario::one_sided(Party party,
                                                 std::map<MeasureId, Rational> budgets) {
    RelaxationScenario scenario;
    scenario.shape = ScenarioShape::OneSided;
    scenario.party = party;
    scenario.budgets = std::move(budgets);
    return scenario;
}

RelaxationScenario RelaxationScenario::bipartite(PartyPair pair,
                                                 std::map<MeasureId, Rational> budgets) {
    RelaxationScenario scenario;
    scenario.shape = ScenarioShape::Bipartite;
    scenario.party_pair = pair;
    scenario.budgets = std::move(budgets);
    return scenario;
}

MeasureId RelaxationScenario::named_measure() const {
    return shape == ScenarioShape::OneSided ? one_sided_measure(party)
                                            : bipartite_measure(party_pair);
}

std::string RelaxationScenario::to_string() const {
    return shape == ScenarioShape::OneSided ? "one-sided:" + mdbell::to_string(party)
                                            : "bipartite:" + mdbell::to_string(party_pair);
}

RelaxationScenario parse_scenario(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view tail = colon == std::string_view::npos ? std::string_view{}
                                                                  : text.substr(colon + 1);
    if (head == "one-sided") {
        if (tail == "A") return RelaxationScenario::one_sided(Party::A);
        if (tail == "B") return RelaxationScenario::one_sided(Party::B);
        if (tail == "C") return RelaxationScenario::one_sided(Party::C);
    } else if (head == "bipartite") {
        if (tail == "AB") return RelaxationScenario::bipartite(PartyPair::AB);
        if (tail == "BC") return RelaxationScenario::bipartite(PartyPair::BC);
        if (tail == "AC") return RelaxationScenario::bipartite(PartyPair::AC);
    }
    throw Error("not a scenario: '" + std::string(text) +
                "' (expected one-sided:A|B|C or bipartite:AB|BC|AC)");
}

namespace {

// Absent budgets mean unconstrained; no L1 distance between probability
// vectors exceeds 2, so larger budgets behave as 2.
Rational budget_or_free(const std::map<MeasureId, Rational>& budgets, MeasureId id) {
    auto it = budgets.find(id);
    if (it == budgets.end())
        return 2;
    if (it->second < 0)
        throw Error("budget for " + to_string(id) + " must be nonnegative, got " +
                    to_string(it->second));
    return std::min(it->second, Rational(2));
}

void reject_ns2_bipartite(InequalityKind kind, const RelaxationScenario& scenario) {
    if (kind == InequalityKind::NS2_99 && scenario.shape == ScenarioShape::Bipartite)
        throw Error("the ns2 inequality has no bipartite relaxed bound");
}

} // namespace

Rational relaxed_bound(InequalityKind kind, const RelaxationScenario& scenario) {
    reject_ns2_bipartite(kind, scenario);
    const InequalitySpec& spec = inequality_spec(kind);
    const auto& budgets = scenario.budgets;
    Rational bound;
    if (kind == InequalityKind::NS2_99) {
        const Rational m1 = budget_or_free(budgets, MeasureId::M1);
        const Rational m2 = budget_or_free(budgets, MeasureId::M2);
        const Rational m3 = budget_or_free(budgets, MeasureId::M3);
        switch (scenario.party) {
        case Party::A: bound = 3 + 2 * m1 + m3; break;
        case Party::B: bound = 3 + 2 * m2 + m3; break;
        case Party::C: bound = 3 + m3; break;
        }
    } else if (scenario.shape == ScenarioShape::OneSided) {
        const Rational m1 = budget_or_free(budgets, MeasureId::M1);
        const Rational m2 = budget_or_free(budgets, MeasureId::M2);
        const Rational m3 = budget_or_free(budgets, MeasureId::M3);
        if (kind == InequalityKind::Mermin) {
            const std::array<std::pair<Rational, Rational>, 6> combos = {
                {{m1, m2}, {m1, m3}, {m2, m1}, {m2, m3}, {m3, m1}, {m3, m2}}};
            Rational relax = 2;
            for (const auto& [mi, mj] : combos)
                relax = std::min(relax, 2 * mi + mj);
            bound = 2 + relax;
        } else {
            bound = 4 + std::min({Rational(4), 2 * m1, 2 * m2, 2 * m3});
        }
    } else {
        const Rational m12 = budget_or_free(budgets, MeasureId::M12);
        const Rational m23 = budget_or_free(budgets, MeasureId::M23);
        const Rational m13 = budget_or_free(budgets, MeasureId::M13);
        if (kind == InequalityKind::Mermin)
            bound = 2 + std::min({m12, m23, m13});
        else
            bound = 4 + std::min({Rational(4), 2 * m12, 2 * m23, 2 * m13});
    }
    return std::clamp(bound, spec.classical_bound, spec.algebraic_max);
}

std::string BoundCheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["inequality"] = mdbell::to_string(kind);
    j["S"] = to_string(s);
    j["bound"] = to_string(bound);
    nlohmann::ordered_json jb = nlohmann::ordered_json::object();
    for (const auto& [id, m] : budgets_used)
        jb[mdbell::to_string(id)] = to_string(m);
    j["budgets"] = jb;
    if (measured)
        j["measured"] = to_string(*measured);
    else
        j["measured"] = nullptr;
    j["verdict"] = passed ? "pass" : "fail";
    j["tight"] = tight;
    j["used_completion"] = used_completion;
    return j.dump();
}

BoundCheckReport check_model_against_bound(const Model& model, InequalityKind kind,
                                           const RelaxationScenario& scenario) {
    reject_ns2_bipartite(kind, scenario);
    BoundCheckReport report;
    report.kind = kind;
    report.s = evaluate(model, kind);
    const MeasureId named = scenario.named_measure();
    report.measured = measure_value(model, named);
    report.budgets_used = scenario.budgets;
    if (is_complete(model)) {
        report.budgets_used[named] = *report.measured;
    } else {
        if (!report.budgets_used.count(named))
            throw Error("a partial model needs an explicit budget for " + to_string(named));
        std::vector<std::pair<MeasureId, Rational>> budget_list(report.budgets_used.begin(),
                                                                report.budgets_used.end());
        if (!complete_contexts(model, budget_list).feasible)
            throw Error("the model admits no completion within the scenario budgets");
        report.used_completion = true;
    }
    RelaxationScenario used = scenario;
    used.budgets = report.budgets_used;
    report.bound = relaxed_bound(kind, used);
    const Rational magnitude = boost::multiprecision::abs(report.s);
    report.passed = magnitude <= report.bound;
    report.tight = magnitude == report.bound;
    return report;
}

} // namespace mdbell
