#include "mdbell/bound_search.hpp"

#include "mdbell/catalog.hpp"

#include <doctest/doctest.h>

#include <random>
#include <set>

using namespace mdbell;

namespace {

ResponseTable fl_table(std::vector<std::array<int, 6>> rows) {
    ResponseTable t;
    t.pairing = Pairing::FullyLocal;
    t.rows = std::move(rows);
    return t;
}

ResponseTable flip_party_a(ResponseTable t) {
    REQUIRE(t.pairing == Pairing::FullyLocal);
    for (auto& row : t.rows) {
        row[0] = -row[0];
        row[1] = -row[1];
    }
    return t;
}

ResponseTable flip_party_c(ResponseTable t) {
    REQUIRE(t.pairing == Pairing::FullyLocal);
    for (auto& row : t.rows) {
        row[4] = -row[4];
        row[5] = -row[5];
    }
    return t;
}

ResponseTable random_fl_table(std::mt19937& rng, int l) {
    std::bernoulli_distribution coin(0.5);
    ResponseTable t;
    t.pairing = Pairing::FullyLocal;
    for (int i = 0; i < l; ++i) {
        std::array<int, 6> row{};
        for (int j = 0; j < 6; ++j)
            row[j] = coin(rng) ? +1 : -1;
        t.rows.push_back(row);
    }
    return t;
}

RelaxationScenario uniform_one_sided(Party party, const Rational& m) {
    return RelaxationScenario::one_sided(
        party, {{MeasureId::M1, m}, {MeasureId::M2, m}, {MeasureId::M3, m}});
}

RelaxationScenario uniform_bipartite(PartyPair pair, const Rational& m) {
    return RelaxationScenario::bipartite(
        pair, {{MeasureId::M12, m}, {MeasureId::M23, m}, {MeasureId::M13, m}});
}

} // namespace

TEST_CASE("strategy enumeration counts match the orbit arithmetic") {
    const StrategyEnumeration fl1 = enumerate_strategies(Pairing::FullyLocal, 1);
    CHECK(fl1.raw_count == 64);
    CHECK(fl1.strategies.size() == 8);

    const StrategyEnumeration fl1_noflip =
        enumerate_strategies(Pairing::FullyLocal, 1, false);
    CHECK(fl1_noflip.strategies.size() == 64);

    const StrategyEnumeration jab1 = enumerate_strategies(Pairing::JointAB, 1);
    CHECK(jab1.raw_count == 64);
    CHECK(jab1.strategies.size() == 16);

    // Burnside over row permutations and outcome flips: (4096 + 8*64)/16.
    const StrategyEnumeration fl2 = enumerate_strategies(Pairing::FullyLocal, 2);
    CHECK(fl2.raw_count == 4096);
    CHECK(fl2.strategies.size() == 288);

    // Multisets of two rows: 64*65/2.
    const StrategyEnumeration fl2_noflip =
        enumerate_strategies(Pairing::FullyLocal, 2, false);
    CHECK(fl2_noflip.strategies.size() == 2080);

    // (4096 + 4*64)/8 with only the joint-block and lone-party flips.
    const StrategyEnumeration jab2 = enumerate_strategies(Pairing::JointAB, 2);
    CHECK(jab2.strategies.size() == 544);

    // (2^18 + 3*4096 + 2*64)/48.
    const StrategyEnumeration fl3 = enumerate_strategies(Pairing::FullyLocal, 3);
    CHECK(fl3.raw_count == 262144);
    CHECK(fl3.strategies.size() == 5720);

    CHECK_THROWS_AS(enumerate_strategies(Pairing::FullyLocal, 0), Error);
    CHECK_THROWS_AS(enumerate_strategies(Pairing::FullyLocal, 4), Error);
}

TEST_CASE("canonicalization is idempotent and orbit-invariant") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const ResponseTable s = random_fl_table(rng, 2);
        const ResponseTable c = canonical_strategy(s);
        CHECK(canonical_strategy(c) == c);
        CHECK(canonical_strategy(flip_party_a(s)) == c);
        ResponseTable swapped = s;
        std::swap(swapped.rows[0], swapped.rows[1]);
        CHECK(canonical_strategy(swapped) == c);
        // Without the flip quotient only row order is quotiented.
        CHECK(canonical_strategy(swapped, false) == canonical_strategy(s, false));
    }
}

TEST_CASE("single-party flips negate the symmetric inequalities but not ns2") {
    const ResponseTable plus = fl_table({{1, 1, 1, 1, 1, 1}});
    const RelaxationScenario free_a = RelaxationScenario::one_sided(Party::A);
    CHECK(lp_max_s(plus, InequalityKind::Mermin, free_a) == 2);
    CHECK(lp_max_s(flip_party_a(plus), InequalityKind::Mermin, free_a) == -2);
    // The all-plus row sits at 0 for Svetlichny (the signs cancel); the row
    // with c1 flipped reaches the deterministic maximum 4.
    const ResponseTable svet4 = fl_table({{1, 1, 1, 1, 1, -1}});
    CHECK(lp_max_s(plus, InequalityKind::Svetlichny, free_a) == 0);
    CHECK(lp_max_s(svet4, InequalityKind::Svetlichny, free_a) == 4);
    CHECK(lp_max_s(flip_party_a(svet4), InequalityKind::Svetlichny, free_a) == -4);
    // ns2 is asymmetric: flipping C moves S from 3 to -1, not to -3.
    const RelaxationScenario free_c = RelaxationScenario::one_sided(Party::C);
    CHECK(lp_max_s(plus, InequalityKind::NS2_99, free_c) == 3);
    CHECK(lp_max_s(flip_party_c(plus), InequalityKind::NS2_99, free_c) == -1);
}

TEST_CASE("canonical representatives preserve the optimum profile") {
    std::mt19937 rng(20260816);
    const Rational m = Rational(1) / 3;
    for (int trial = 0; trial < 20; ++trial) {
        const ResponseTable s = random_fl_table(rng, 2);
        const ResponseTable c = canonical_strategy(s);
        for (InequalityKind kind : {InequalityKind::Mermin, InequalityKind::Svetlichny}) {
            const RelaxationScenario scenario = uniform_one_sided(Party::A, m);
            const std::multiset<Rational> orig = {lp_max_s(s, kind, scenario),
                                                  lp_max_s(flip_party_a(s), kind, scenario)};
            const std::multiset<Rational> canon = {lp_max_s(c, kind, scenario),
                                                   lp_max_s(flip_party_a(c), kind, scenario)};
            CHECK(orig == canon);
        }
        // ns2 canonicalization only reorders rows, so the optimum is unchanged.
        const ResponseTable c_ns2 = canonical_strategy(s, false);
        const RelaxationScenario scenario = uniform_one_sided(Party::C, m);
        CHECK(lp_max_s(s, InequalityKind::NS2_99, scenario) ==
              lp_max_s(c_ns2, InequalityKind::NS2_99, scenario));
    }
}

TEST_CASE("catalog strategies certify at their published budget curves") {
    const ResponseTable ii =
        build_catalog_model(CatalogSpec::with_p(CatalogId::II, 0)).responses;
    const std::vector<std::pair<Rational, std::pair<Rational, bool>>> ii_curve = {
        {0, {4, true}},
        {Rational(1) / 2, {6, false}},
        {1, {8, false}},
        {2, {8, true}}};
    for (const auto& [m, expected] : ii_curve) {
        const BoundCertificate cert = certify_strategy(
            ii, InequalityKind::Svetlichny, uniform_one_sided(Party::A, m));
        CHECK(cert.lp_value_is_exact);
        CHECK(cert.lp_value == expected.first);
        CHECK(cert.sound == expected.second);
        if (cert.sound)
            CHECK(cert.tight);
    }

    const ResponseTable iii =
        build_catalog_model(CatalogSpec::with_p(CatalogId::III, 0)).responses;
    const std::vector<std::pair<Rational, std::pair<Rational, bool>>> iii_curve = {
        {0, {3, true}}, {1, {5, false}}, {2, {5, true}}};
    for (const auto& [m, expected] : iii_curve) {
        const BoundCertificate cert = certify_strategy(
            iii, InequalityKind::NS2_99, uniform_one_sided(Party::C, m));
        CHECK(cert.lp_value == expected.first);
        CHECK(cert.sound == expected.second);
    }

    const ResponseTable iv =
        build_catalog_model(CatalogSpec::with_p(CatalogId::IV, 0)).responses;
    for (const Rational& m : {Rational(0), Rational(1), Rational(2)}) {
        const BoundCertificate cert = certify_strategy(
            iv, InequalityKind::Mermin, uniform_bipartite(PartyPair::AB, m));
        CHECK(cert.lp_value == 2 + m);
        CHECK(cert.sound);
        CHECK(cert.tight);
    }
}

TEST_CASE("linear-program inputs are validated") {
    const RelaxationScenario free_a = RelaxationScenario::one_sided(Party::A);
    CHECK_THROWS_WITH_AS(lp_max_s(ResponseTable{}, InequalityKind::Mermin, free_a),
                         "strategy has no rows", Error);

    ResponseTable jab;
    jab.pairing = Pairing::JointAB;
    jab.rows = {{1, 1, 1, 1, 1, 1}};
    CHECK_THROWS_WITH_AS(lp_max_s(jab, InequalityKind::NS2_99,
                                  RelaxationScenario::one_sided(Party::C)),
                         "the ns2 linear program requires a fully local strategy", Error);

    const ResponseTable plus = fl_table({{1, 1, 1, 1, 1, 1}});
    CHECK_THROWS_AS(lp_max_s(plus, InequalityKind::Mermin,
                             RelaxationScenario::one_sided(Party::A, {{MeasureId::M1, -1}})),
                    Error);
    // Budgets of 2 or more are vacuous rather than an error.
    CHECK(lp_max_s(plus, InequalityKind::Mermin,
                   RelaxationScenario::one_sided(Party::A, {{MeasureId::M1, 3}})) == 2);
}

TEST_CASE("a two-row strategy reaches 4 with zero one-party and one-pair dependence") {
    // Regression pin: replacing signed terms does not bound S by 2 + 2*M1 + M2.
    const ResponseTable rows = fl_table({{1, 1, 1, 1, 1, 1}, {1, -1, 1, 1, 1, 1}});
    ContextDistribution dist;
    for (const Context& ctx : all_full_contexts())
        dist.columns.emplace(ctx, *ctx.z == 0 ? std::vector<Rational>{1, 0}
                                               : std::vector<Rational>{0, 1});
    const Model model = build_model(rows, std::move(dist), "pin");
    CHECK(evaluate(model, InequalityKind::Mermin) == 4);
    CHECK(measure_value(model, MeasureId::M1) == 0);
    CHECK(measure_value(model, MeasureId::M2) == 0);
    CHECK(measure_value(model, MeasureId::M12) == 0);
    CHECK(measure_value(model, MeasureId::M3) == 2);

    const Rational lp = lp_max_s(
        rows, InequalityKind::Mermin,
        RelaxationScenario::one_sided(Party::A, {{MeasureId::M1, 0}, {MeasureId::M2, 0}}));
    CHECK(lp == 4);
}

TEST_CASE("soundness verification rejects the undefined ns2 bipartite gate") {
    CHECK_THROWS_AS(verify_bound_soundness(InequalityKind::NS2_99, ScenarioShape::Bipartite, 1,
                                           {Rational(0)}),
                    Error);
}

TEST_CASE("untied pair blocks let ns2 hit its algebraic maximum at zero budget") {
    const ResponseTable rows = fl_table({{1, 1, 1, 1, -1, 1}, {1, 1, 1, 1, 1, 1}});
    const RelaxationScenario zero = uniform_one_sided(Party::C, 0);

    LpOptions tied;
    CHECK(lp_max_s(rows, InequalityKind::NS2_99, zero, tied) == 3);

    LpOptions untied;
    untied.tie_pair_blocks = false;
    CHECK(lp_max_s(rows, InequalityKind::NS2_99, zero, untied) == 5);
}

TEST_CASE("the real-arithmetic mode tracks the exact optimum") {
    const ResponseTable ii =
        build_catalog_model(CatalogSpec::with_p(CatalogId::II, 0)).responses;
    LpOptions real;
    real.mode = NumericMode::Real;
    const BoundCertificate cert = certify_strategy(
        ii, InequalityKind::Svetlichny, uniform_one_sided(Party::A, Rational(1) / 2), real);
    CHECK_FALSE(cert.lp_value_is_exact);
    CHECK(cert.lp_value_real == doctest::Approx(6.0).epsilon(1e-9));
    CHECK_FALSE(cert.sound);
}
