#pragma once

#include "mdbell/inequalities.hpp"
#include "mdbell/scenario.hpp"
#include "mdbell/simplex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mdbell {

struct LpOptions {
    NumericMode mode = NumericMode::Exact;
    // Tie each pair-context block of the ns2 inequality to the hidden-variable
    // distribution shared by the full contexts extending it.  When false the
    // pair blocks get independent distributions (no budget reaches them), and
    // the ns2 value can hit its algebraic maximum at zero dependence.
    bool tie_pair_blocks = true;
};

// Largest S over hidden-variable distributions for a fixed response table,
// subject to the scenario's dependence budgets, by exact-rational (or
// floating, per options) linear programming.  One-sided by construction:
// the ns2 inequality is asymmetric (its deterministic minimum is -5), so
// max S and max |S| differ there.  Budgets of 2 or more are vacuous and
// dropped; a budget of 0 merges the pair's distributions.  The ns2 kind
// requires a fully local strategy.
LpSolution lp_max_s_solution(const ResponseTable& strategy, InequalityKind kind,
                             const RelaxationScenario& scenario,
                             const LpOptions& options = {});

// Exact-mode convenience wrapper returning just the optimum.
Rational lp_max_s(const ResponseTable& strategy, InequalityKind kind,
                  const RelaxationScenario& scenario, const LpOptions& options = {});

// One strategy checked against the closed-form relaxed bound.
struct BoundCertificate {
    ResponseTable strategy;
    InequalityKind kind = InequalityKind::Mermin;
    RelaxationScenario scenario;
    Rational lp_value;            // meaningful when lp_value_is_exact
    bool lp_value_is_exact = false;
    double lp_value_real = 0;
    Rational bound;
    bool sound = false; // lp optimum <= bound
    bool tight = false; // lp optimum == bound

    std::string to_json() const;
};

BoundCertificate certify_strategy(const ResponseTable& strategy, InequalityKind kind,
                                  const RelaxationScenario& scenario,
                                  const LpOptions& options = {});

// All response tables with l hidden-variable rows, up to a symmetry
// quotient: rows are unordered (label permutation), and with flip_quotient
// also global outcome flips per party (fully local) or per joint block and
// lone party (joint pairings).  raw_count is the ordered, unquotiented
// table count 2^(6l).  Supports l in {1, 2, 3}.
struct StrategyEnumeration {
    std::vector<ResponseTable> strategies;
    std::uint64_t raw_count = 0;
};

StrategyEnumeration enumerate_strategies(Pairing pairing, int l, bool flip_quotient = true);

// Lexicographically least member of the strategy's symmetry orbit (sorted
// rows; plus outcome flips when flip_quotient).
ResponseTable canonical_strategy(const ResponseTable& strategy, bool flip_quotient = true);

// Exhaustive soundness gate: enumerates every fully local strategy with l
// rows (deduplicated by the per-row objective-coefficient signature, which
// determines the whole linear program), maximizes S under equal budgets m
// for the scenario family at each grid point, and compares against the
// relaxed bound (for one-sided ns2, the tightest party formula).  Throws
// with the offending strategy serialized if any optimum exceeds the bound.
struct SoundnessPoint {
    Rational budget;
    Rational max_s;
    Rational bound;
    bool attained = false; // max_s == bound
};

struct SoundnessSummary {
    InequalityKind kind = InequalityKind::Mermin;
    ScenarioShape shape = ScenarioShape::OneSided;
    int l = 1;
    std::vector<SoundnessPoint> points;
    std::size_t strategies_enumerated = 0; // after signature dedup
    std::size_t lp_count = 0;

    std::string to_json() const;
    std::string to_csv() const;
};

SoundnessSummary verify_bound_soundness(InequalityKind kind, ScenarioShape shape, int l,
                                        const std::vector<Rational>& budget_grid,
                                        const LpOptions& options = {});

} // namespace mdbell
