#include "mdbell/catalog.hpp"

#include "mdbell/dependence.hpp"
#include "mdbell/inequalities.hpp"

#include <doctest/doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace mdbell;

namespace {

const std::vector<CatalogId> kAllIds = {CatalogId::I, CatalogId::II, CatalogId::III,
                                        CatalogId::IV, CatalogId::V};

std::string sign_letters(CatalogId id) {
    switch (id) {
    case CatalogId::I: return "abcd";
    case CatalogId::II: return "abcdefghi";
    case CatalogId::III: return "abc";
    case CatalogId::IV: return "ab";
    case CatalogId::V: return "abcde";
    }
    return {};
}

CatalogSpec base_spec(CatalogId id, const Rational& p) {
    if (id == CatalogId::I)
        return CatalogSpec::model_i(p / 2, p / 2);
    return CatalogSpec::with_p(id, p);
}

std::map<std::string, int> signs_from_mask(const std::string& letters, unsigned mask) {
    std::map<std::string, int> signs;
    for (std::size_t i = 0; i < letters.size(); ++i)
        signs[std::string(1, letters[i])] = (mask >> i) & 1u ? -1 : +1;
    return signs;
}

std::set<Context> supplied_contexts(const Model& model) {
    std::set<Context> out;
    for (const auto& [context, column] : model.distributions.columns)
        out.insert(context);
    return out;
}

} // namespace

TEST_CASE("catalog ids round-trip") {
    CHECK(to_string(CatalogId::I) == "I");
    CHECK(to_string(CatalogId::V) == "V");
    for (CatalogId id : kAllIds)
        CHECK(parse_catalog_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_catalog_id("VI"), Error);
    CHECK_THROWS_AS(parse_catalog_id("model I"), Error);
}

TEST_CASE("catalog models have the tabulated shapes") {
    const Model i = build_catalog_model(CatalogSpec::model_i(0, 0));
    CHECK(i.responses.pairing == Pairing::FullyLocal);
    CHECK(i.responses.rows.size() == 4);
    CHECK(supplied_contexts(i) ==
          std::set<Context>{Context::full(1, 0, 0), Context::full(0, 1, 0),
                            Context::full(0, 0, 1), Context::full(1, 1, 1)});
    CHECK_FALSE(is_complete(i));

    const Model ii = build_catalog_model(CatalogSpec::with_p(CatalogId::II, 0));
    CHECK(ii.responses.pairing == Pairing::JointAB);
    CHECK(ii.responses.rows.size() == 9);
    CHECK(supplied_contexts(ii) ==
          std::set<Context>(all_full_contexts().begin(), all_full_contexts().end()));
    CHECK(is_complete(ii));

    const Model iii = build_catalog_model(CatalogSpec::with_p(CatalogId::III, 0));
    CHECK(iii.responses.pairing == Pairing::FullyLocal);
    CHECK(iii.responses.rows.size() == 3);
    CHECK(supplied_contexts(iii) ==
          std::set<Context>{Context::full(1, 1, 0), Context::full(1, 1, 1),
                            Context::pair_xy(0, 0), Context::pair_xz(0, 0),
                            Context::pair_yz(0, 1)});
    CHECK_FALSE(is_complete(iii));

    const Model iv = build_catalog_model(CatalogSpec::with_p(CatalogId::IV, 0));
    CHECK(iv.responses.pairing == Pairing::FullyLocal);
    CHECK(iv.responses.rows.size() == 2);
    CHECK(supplied_contexts(iv) == supplied_contexts(i));
    CHECK_FALSE(is_complete(iv));

    const Model v = build_catalog_model(CatalogSpec::with_p(CatalogId::V, 0));
    CHECK(v.responses.pairing == Pairing::JointAB);
    CHECK(v.responses.rows.size() == 5);
    CHECK(is_complete(v));
}

TEST_CASE("catalog parameters are validated") {
    CHECK_THROWS_WITH_AS(build_catalog_model(CatalogSpec::with_p(CatalogId::I, Rational(1) / 2)),
                         "model I takes parameters p1 and p2, not a single p", Error);
    CHECK_THROWS_AS(build_catalog_model(CatalogSpec::model_i(Rational(3) / 4, Rational(1) / 2)),
                    Error);
    CHECK_THROWS_AS(build_catalog_model(CatalogSpec::model_i(-Rational(1) / 8, 0)), Error);
    CHECK_THROWS_AS(build_catalog_model(CatalogSpec::with_p(CatalogId::II, -Rational(1) / 2)),
                    Error);
    CHECK_THROWS_AS(build_catalog_model(CatalogSpec::with_p(CatalogId::II, Rational(9) / 8)),
                    Error);

    CHECK_THROWS_WITH_AS(
        build_catalog_model(CatalogSpec::with_p(CatalogId::II, 0, {{"z", 1}})),
        "model II has no sign letter 'z'", Error);
    CHECK_THROWS_WITH_AS(build_catalog_model(CatalogSpec::model_i(0, 0, {{"e", -1}})),
                         "model I has no sign letter 'e'", Error);
    CHECK_THROWS_WITH_AS(
        build_catalog_model(CatalogSpec::with_p(CatalogId::IV, 0, {{"a", 2}})),
        "sign 'a' must be +1 or -1, got 2", Error);
}

TEST_CASE("sign choices never change S or the dependence measures") {
    for (CatalogId id : kAllIds) {
        const std::string letters = sign_letters(id);
        const std::vector<Rational> ps = {0, Rational(1) / 2, 1};
        for (const Rational& p : ps) {
            CatalogSpec base = base_spec(id, p);
            const CatalogClaims claims = expected_claims(base);
            const Model baseline = build_catalog_model(base);
            const DependenceReport baseline_report = dependence_report(baseline);
            for (unsigned mask = 0; mask < (1u << letters.size()); ++mask) {
                CatalogSpec spec = base;
                spec.signs = signs_from_mask(letters, mask);
                const Model model = build_catalog_model(spec);
                CHECK(evaluate(model, claims.target) == claims.s);
                const DependenceReport report = dependence_report(model);
                CHECK(report.overall == baseline_report.overall);
                CHECK(report.one_sided == baseline_report.one_sided);
                CHECK(report.bipartite == baseline_report.bipartite);
            }
        }
    }
}

TEST_CASE("closed-form claims hold across the parameter range") {
    for (int num = 0; num <= 8; ++num) {
        const Rational p = Rational(num) / 8;

        const Model ii = build_catalog_model(CatalogSpec::with_p(CatalogId::II, p));
        CHECK(evaluate(ii, InequalityKind::Svetlichny) == 4 + 4 * p);
        CHECK(measure_value(ii, MeasureId::M1) == 2 * p);

        const Model iii = build_catalog_model(CatalogSpec::with_p(CatalogId::III, p));
        CHECK(evaluate(iii, InequalityKind::NS2_99) == 3 + 2 * p);
        CHECK(measure_value(iii, MeasureId::M3) == 2 * p);

        const Model iv = build_catalog_model(CatalogSpec::with_p(CatalogId::IV, p));
        CHECK(evaluate(iv, InequalityKind::Mermin) == 2 + 2 * p);
        CHECK(measure_value(iv, MeasureId::M12) == 2 * p);
        CHECK(measure_value(iv, MeasureId::M13) == 0);

        const Model v = build_catalog_model(CatalogSpec::with_p(CatalogId::V, p));
        CHECK(evaluate(v, InequalityKind::Svetlichny) == 4 + 4 * p);
        CHECK(measure_value(v, MeasureId::M12) == 2 * p);
        CHECK(measure_value(v, MeasureId::M23) == 2 * p);
        CHECK(measure_value(v, MeasureId::M13) == 2 * p);
    }
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n1 + n2 <= 4; ++n2) {
            const Rational p1 = Rational(n1) / 4, p2 = Rational(n2) / 4;
            const Model i = build_catalog_model(CatalogSpec::model_i(p1, p2));
            CHECK(evaluate(i, InequalityKind::Mermin) == 2 + 2 * p1 + 2 * p2);
            CHECK(dependence_report(i).lower_bound_only);
        }
}

TEST_CASE("model II at p = 0 concentrates on the first hidden variable") {
    const Model model = build_catalog_model(CatalogSpec::with_p(CatalogId::II, 0));
    const Behavior b = behavior(model);
    for (const Context& ctx : all_full_contexts()) {
        const int x = *ctx.x, y = *ctx.y, z = *ctx.z;
        // Row 1 gives the AB product +1 except at (x', y'), and C = +1 always.
        const int u = (x == 1 && y == 1) ? -1 : +1;
        CHECK(correlator(model, ctx) == u);
        if (u == +1) {
            CHECK(b.prob(+1, +1, +1, x, y, z) == Rational(1) / 2);
            CHECK(b.prob(-1, -1, +1, x, y, z) == Rational(1) / 2);
            CHECK(b.prob(+1, -1, +1, x, y, z) == 0);
        } else {
            CHECK(b.prob(+1, -1, +1, x, y, z) == Rational(1) / 2);
            CHECK(b.prob(-1, +1, +1, x, y, z) == Rational(1) / 2);
            CHECK(b.prob(+1, +1, +1, x, y, z) == 0);
        }
        CHECK(b.prob(+1, +1, -1, x, y, z) == 0);
        CHECK(b.prob(-1, -1, -1, x, y, z) == 0);
    }
}
