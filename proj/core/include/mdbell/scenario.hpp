#pragma once

#include "mdbell/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdbell {

// Response-function grouping: either every party answers alone, or two
// parties share a joint response that fixes only the product of their
// outcomes while the third answers alone.
enum class Pairing { FullyLocal, JointAB, JointAC, JointBC };

std::string to_string(Pairing pairing);
Pairing parse_pairing(std::string_view text);

// A measurement context: a setting in {0,1} for at least two of the three
// parties A, B, C whose settings are written x, y, z.  Unprimed letters
// denote setting 0 and primed letters setting 1, so "x'yz" is the full
// context (1,0,0) and "yz'" the pair context with y=0, z=1.
struct Context {
    std::optional<int> x, y, z;

    bool is_full() const { return x && y && z; }
    bool is_pair() const {
        return int(x.has_value()) + int(y.has_value()) + int(z.has_value()) == 2;
    }
    bool is_valid() const;

    static Context full(int x, int y, int z);
    static Context pair_xy(int x, int y);
    static Context pair_xz(int x, int z);
    static Context pair_yz(int y, int z);
    static Context parse(std::string_view text);

    std::string to_string() const;

    friend auto operator<=>(const Context&, const Context&) = default;
};

// The eight full contexts in lexicographic (x,y,z) order.
const std::array<Context, 8>& all_full_contexts();

// One deterministic response row per hidden variable.  Row layout by
// pairing:
//   FullyLocal : A0 A1 B0 B1 C0 C1
//   JointAB    : A0B0 A0B1 A1B0 A1B1 C0 C1
//   JointAC    : A0C0 A0C1 A1C0 A1C1 B0 B1
//   JointBC    : B0C0 B0C1 B1C0 B1C1 A0 A1
// A joint entry is the predetermined product of the grouped parties'
// outcomes; their individual outcomes are not modeled.
struct ResponseTable {
    Pairing pairing = Pairing::FullyLocal;
    std::vector<std::array<int, 6>> rows;

    std::size_t size() const { return rows.size(); }

    // Product of all three parties' outcomes at row lam under a full context.
    int full_product(std::size_t lam, const Context& ctx) const;

    // Product of the two outcomes a pair context asks for, when the pairing
    // determines it without the absent party's setting; nullopt otherwise.
    std::optional<int> pair_product(std::size_t lam, const Context& ctx) const;

    friend bool operator==(const ResponseTable&, const ResponseTable&) = default;
};

// Column labels matching the row layout above ("A0", ... or "A0B0", ...).
std::vector<std::string> response_column_names(Pairing pairing);

// Setting-conditioned distributions over the hidden variable: one exact
// probability vector per context.
struct ContextDistribution {
    std::map<Context, std::vector<Rational>> columns;

    bool has(const Context& ctx) const { return columns.count(ctx) != 0; }
    const std::vector<Rational>& at(const Context& ctx) const;
    std::size_t dimension() const;

    friend bool operator==(const ContextDistribution&, const ContextDistribution&) = default;
};

// A measurement-dependent local model: deterministic responses plus
// setting-conditioned hidden-variable distributions.
struct Model {
    ResponseTable responses;
    ContextDistribution distributions;
    std::string label;

    friend bool operator==(const Model&, const Model&) = default;
};

// Validates both pieces and their cross-invariants: matching hidden-variable
// counts, normalized nonnegative columns, entries exactly +1 or -1, and pair
// contexts grouped as the pairing groups them.
Model build_model(ResponseTable responses, ContextDistribution distributions,
                  std::string label);

// True when every context the model supplies is a full context and all eight
// are present.
bool is_complete(const Model& model);

// Full conditional outcome distribution P(a,b,c|x,y,z).
struct Behavior {
    // p[x][y][z][o] with o = 4*(a<0) + 2*(b<0) + (c<0).
    std::array<std::array<std::array<std::array<Rational, 8>, 2>, 2>, 2> p{};

    const Rational& prob(int a, int b, int c, int x, int y, int z) const;
    Rational& prob(int a, int b, int c, int x, int y, int z);
};

// P(a,b,c|x,y,z) = sum_lam rho(lam|x,y,z) * P_lam(a,b,c|x,y,z); requires all
// eight full contexts.  A joint response pins only the grouped product, which
// is completed uniformly: P_lam over the grouped pair puts weight 1/2 on each
// outcome pair whose product matches the joint sign, the unique completion
// with unbiased single-party marginals.
Behavior behavior(const Model& model);

// <product of the outcomes ctx asks for>.  Pair contexts use the directly
// supplied pair distribution, never a marginalization, and require the
// pairing to determine the two outcomes without the absent setting.
Rational correlator(const Model& model, const Context& ctx);

struct NoSignalingViolation {
    std::string identity;
    Rational lhs, rhs;
};

struct NoSignalingReport {
    std::vector<NoSignalingViolation> violations;
    bool passed() const { return violations.empty(); }
};

// Exact check that every single-party and two-party outcome marginal is
// independent of the remaining parties' settings.
NoSignalingReport check_no_signaling(const Behavior& behavior);

// Runs the same marginal checks on each hidden variable's own behavior (a
// point distribution on that row), so setting-conditioned weights never
// enter.  Violation identities are prefixed with the row number.
NoSignalingReport check_response_no_signaling(const Model& model);

struct ContextConsistencyEntry {
    Context pair_context;
    std::vector<Context> equal_full_contexts;
    std::vector<Context> differing_full_contexts;
};

// Informational comparison of each supplied pair-context column against the
// columns of the full contexts extending it; a mismatch is reported, not an
// error, and a pair context with no supplied extension is noted by an entry
// with both lists empty.
struct ContextConsistencyReport {
    std::vector<ContextConsistencyEntry> entries;
    bool all_consistent() const;
};

ContextConsistencyReport check_context_consistency(const Model& model);

} // namespace mdbell
