#pragma once

#include "mdbell/dependence.hpp"
#include "mdbell/scenario.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mdbell {

// The three inequalities of the tripartite two-setting scenario handled
// here: Mermin, Svetlichny, and inequality #99 of the two-party
// no-signaling facet family.
enum class InequalityKind { Mermin, Svetlichny, NS2_99 };

std::string to_string(InequalityKind kind);
InequalityKind parse_inequality(std::string_view text);

struct InequalityTerm {
    Context context;
    int sign = +1; // +1 or -1
};

struct InequalitySpec {
    InequalityKind kind;
    std::vector<InequalityTerm> terms;
    Rational classical_bound;
    Rational algebraic_max;
    double quantum_ghz_value; // value reached by the GHZ state
};

const InequalitySpec& inequality_spec(InequalityKind kind);

// Signed value S = sum of sign * correlator over the inequality's terms.
// Every term's context must be supplied by the model, and pair-context
// terms must have their product determined under the model's pairing.
Rational evaluate(const Model& model, InequalityKind kind);

// A relaxation scenario names which settings may influence the hidden
// variable: one party's setting, or a pair of settings jointly.  Budgets
// cap the corresponding dependence measures; an absent budget means
// unconstrained.
enum class ScenarioShape { OneSided, Bipartite };

struct RelaxationScenario {
    ScenarioShape shape = ScenarioShape::OneSided;
    Party party = Party::A;               // used when shape is OneSided
    PartyPair party_pair = PartyPair::AB; // used when shape is Bipartite
    std::map<MeasureId, Rational> budgets;

    static RelaxationScenario one_sided(Party party,
                                        std::map<MeasureId, Rational> budgets = {});
    static RelaxationScenario bipartite(PartyPair pair,
                                        std::map<MeasureId, Rational> budgets = {});

    // The measure the scenario is about: M1/M2/M3 or M12/M23/M13.
    MeasureId named_measure() const;
    std::string to_string() const; // "one-sided:A", "bipartite:AB", ...
};

RelaxationScenario parse_scenario(std::string_view text);

// Largest |S| a model can reach when the scenario's budgets hold, clamped
// to [classical bound, algebraic max].  Budgets outside the map default to
// the unconstrained value 2.  The bipartite shape is rejected for NS2_99.
Rational relaxed_bound(InequalityKind kind, const RelaxationScenario& scenario);

// Checks one model against the relaxed bound.  For a complete model the
// scenario's named measure is measured from the model itself and the other
// budgets come from the scenario.  For a partial model all budgets come
// from the scenario; the named one must be present, and the budgets are
// first certified achievable by a completion (used_completion reports
// that).  The verdict compares |S| against the bound.
struct BoundCheckReport {
    InequalityKind kind = InequalityKind::Mermin;
    Rational s;
    std::optional<Rational> measured; // model's own value of the named measure
    std::map<MeasureId, Rational> budgets_used;
    Rational bound;
    bool passed = false;
    bool tight = false;
    bool used_completion = false;

    std::string to_json() const;
};

BoundCheckReport check_model_against_bound(const Model& model, InequalityKind kind,
                                           const RelaxationScenario& scenario);

} // namespace mdbell
