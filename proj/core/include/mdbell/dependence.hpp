#pragma once

#include "mdbell/scenario.hpp"
#include "mdbell/simplex.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdbell {

enum class Party { A, B, C };
enum class PartyPair { AB, BC, AC };

std::string to_string(Party party);
std::string to_string(PartyPair pair);

// The seven measurement-dependence measures: the overall supremum M, the
// one-sided M1/M2/M3 (one party's setting varies), and the bipartite
// M12/M23/M13 (two parties' settings vary together, third fixed).
enum class MeasureId { M, M1, M2, M3, M12, M23, M13 };

std::string to_string(MeasureId id);
MeasureId parse_measure(std::string_view text);
MeasureId one_sided_measure(Party party);
MeasureId bipartite_measure(PartyPair pair);

// The unordered pairs of full contexts whose L1 distances the measure takes
// a supremum over.  One-sided: the named setting differs, the others are
// fixed.  Bipartite: both named settings differ (direct and crossed pairs),
// the third is fixed.  Overall: all 28 pairs.
const std::vector<std::pair<Context, Context>>& measure_pairs(MeasureId id);

// Exact L1 distance between two probability vectors of equal length.
Rational l1_distance(const std::vector<Rational>& u, const std::vector<Rational>& v);

// Supremum of L1 distance over the measure's context pairs, restricted to
// pairs whose contexts the model supplies; nullopt when no pair is present.
// On a partial model the result is a lower bound on the completed supremum.
std::optional<Rational> measure_value(const Model& model, MeasureId id);

std::optional<Rational> measure_one_sided(const Model& model, Party party);
std::optional<Rational> measure_bipartite(const Model& model, PartyPair pair);
std::optional<Rational> measure_overall(const Model& model);

// F = 1 - m/2; errors outside [0, 2].
Rational freedom(const Rational& m);

// Every defined measure with its freedom; lower_bound_only marks a partial
// model (present context pairs only).
struct DependenceReport {
    std::optional<Rational> overall;
    std::array<std::optional<Rational>, 3> one_sided; // M1, M2, M3
    std::array<std::optional<Rational>, 3> bipartite; // M12, M23, M13
    bool lower_bound_only = false;

    // Flat JSON object with null for undefined measures; freedoms use the
    // measure's name with M replaced by F.
    std::string to_json() const;
};

DependenceReport dependence_report(const Model& model);

// Decides by linear programming whether the model's unspecified full-context
// columns can be filled in (responses fixed) so that every listed measure is
// at most its budget; returns a witness extension when feasible.
struct CompletionResult {
    bool feasible = false;
    std::optional<Model> witness;
};

CompletionResult complete_contexts(const Model& model,
                                   const std::vector<std::pair<MeasureId, Rational>>& budgets,
                                   NumericMode mode = NumericMode::Exact);

} // namespace mdbell
