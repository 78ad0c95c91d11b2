#include "mdbell/catalog.hpp"

#include <array>

namespace mdbell {

std::string to_string(CatalogId id) {
    switch (id) {
    case CatalogId::I: return "I";
    case CatalogId::II: return "II";
    case CatalogId::III: return "III";
    case CatalogId::IV: return "IV";
    case CatalogId::V: return "V";
    }
    throw Error("invalid catalog id");
}

CatalogId parse_catalog_id(std::string_view text) {
    if (text == "I" || text == "1") return CatalogId::I;
    if (text == "II" || text == "2") return CatalogId::II;
    if (text == "III" || text == "3") return CatalogId::III;
    if (text == "IV" || text == "4") return CatalogId::IV;
    if (text == "V" || text == "5") return CatalogId::V;
    throw Error("not a catalog model id: '" + std::string(text) +
                "' (expected I, II, III, IV, or V)");
}

CatalogSpec CatalogSpec::model_i(Rational p1, Rational p2, std::map<std::string, int> signs) {
    CatalogSpec spec;
    spec.id = CatalogId::I;
    spec.p1 = std::move(p1);
    spec.p2 = std::move(p2);
    spec.signs = std::move(signs);
    return spec;
}

CatalogSpec CatalogSpec::with_p(CatalogId id, Rational p, std::map<std::string, int> signs) {
    if (id == CatalogId::I)
        throw Error("model I takes parameters p1 and p2, not a single p");
    CatalogSpec spec;
    spec.id = id;
    spec.p = std::move(p);
    spec.signs = std::move(signs);
    return spec;
}

namespace {

// Resolves the model's sign letters against CatalogSpec::signs: listed
// letters must be +1 or -1, unknown letters are rejected, missing ones
// default to +1.
class SignSet {
public:
    SignSet(const CatalogSpec& spec, std::string_view letters) {
        for (const auto& [name, value] : spec.signs) {
            if (name.size() != 1 || letters.find(name[0]) == std::string_view::npos)
                throw Error("model " + to_string(spec.id) + " has no sign letter '" + name + "'");
            if (value != 1 && value != -1)
                throw Error("sign '" + name + "' must be +1 or -1, got " + std::to_string(value));
            values_[static_cast<unsigned char>(name[0])] = value;
        }
    }

    int operator()(char letter) const {
        const int v = values_[static_cast<unsigned char>(letter)];
        return v == 0 ? 1 : v;
    }

private:
    std::array<int, 256> values_{};
};

void require_unit_interval(const CatalogSpec& spec) {
    if (spec.p < 0 || spec.p > 1)
        throw Error("model " + to_string(spec.id) + " needs 0 <= p <= 1, got p = " +
                    to_string(spec.p));
}

ContextDistribution full_grid_distribution(std::size_t rows,
                                           const std::map<Context, std::size_t>& row_for_context,
                                           const Rational& p) {
    ContextDistribution dist;
    for (const Context& ctx : all_full_contexts()) {
        std::vector<Rational> column(rows, Rational(0));
        column[0] = 1 - p;
        column[row_for_context.at(ctx)] += p;
        dist.columns.emplace(ctx, std::move(column));
    }
    return dist;
}

Model build_model_i(const CatalogSpec& spec) {
    if (spec.p1 < 0 || spec.p2 < 0 || spec.p1 + spec.p2 > 1)
        throw Error("model I needs p1 >= 0, p2 >= 0, and p1 + p2 <= 1, got p1 = " +
                    to_string(spec.p1) + ", p2 = " + to_string(spec.p2));
    const SignSet sign(spec, "abcd");
    const int a = sign('a'), b = sign('b'), c = sign('c'), d = sign('d');
    ResponseTable responses;
    responses.pairing = Pairing::FullyLocal;
    responses.rows = {{a, a, a, a, 1, 1},
                      {b, b, b, b, 1, -1},
                      {c, c, c, c, 1, 1},
                      {d, d, d, -d, 1, 1}};
    const Rational p1 = spec.p1, p2 = spec.p2;
    ContextDistribution dist;
    dist.columns.emplace(Context::full(1, 0, 0), std::vector<Rational>{1 - p1, p1, 0, 0});
    dist.columns.emplace(Context::full(0, 1, 0), std::vector<Rational>{1 - p2, 0, p2, 0});
    dist.columns.emplace(Context::full(0, 0, 1),
                         std::vector<Rational>{1 - p1 - p2, 0, p1, p2});
    dist.columns.emplace(Context::full(1, 1, 1),
                         std::vector<Rational>{1 - p1 - p2, p2, 0, p1});
    return build_model(std::move(responses), std::move(dist), "model I");
}

Model build_model_ii(const CatalogSpec& spec) {
    require_unit_interval(spec);
    const SignSet sign(spec, "abcdefghi");
    const int a = sign('a'), b = sign('b'), c = sign('c'), d = sign('d'), e = sign('e'),
              f = sign('f'), g = sign('g'), h = sign('h'), i = sign('i');
    ResponseTable responses;
    responses.pairing = Pairing::JointAB;
    responses.rows = {{a, a, a, -a, a, a}, {b, b, b, b, b, b}, {c, c, c, c, c, c},
                      {d, d, d, d, d, d}, {e, -e, e, e, e, e}, {f, f, f, f, f, f},
                      {g, g, -g, g, g, g}, {h, h, h, -h, h, h}, {i, i, i, i, i, -i}};
    std::map<Context, std::size_t> row_for_context;
    const auto& fulls = all_full_contexts();
    for (std::size_t k = 0; k < fulls.size(); ++k)
        row_for_context.emplace(fulls[k], k + 1);
    return build_model(std::move(responses), full_grid_distribution(9, row_for_context, spec.p),
                       "model II");
}

Model build_model_iii(const CatalogSpec& spec) {
    require_unit_interval(spec);
    const SignSet sign(spec, "abc");
    const int a = sign('a'), b = sign('b'), c = sign('c');
    ResponseTable responses;
    responses.pairing = Pairing::FullyLocal;
    responses.rows = {{-a, a, -a, a, -a, -a}, {b, b, b, b, 1, 1}, {c, c, c, c, -1, 1}};
    const Rational p = spec.p;
    ContextDistribution dist;
    dist.columns.emplace(Context::full(1, 1, 0), std::vector<Rational>{0, 1 - p, p});
    dist.columns.emplace(Context::full(1, 1, 1), std::vector<Rational>{0, 1, 0});
    dist.columns.emplace(Context::pair_xy(0, 0), std::vector<Rational>{1, 0, 0});
    dist.columns.emplace(Context::pair_xz(0, 0), std::vector<Rational>{1, 0, 0});
    dist.columns.emplace(Context::pair_yz(0, 1), std::vector<Rational>{1, 0, 0});
    return build_model(std::move(responses), std::move(dist), "model III");
}

Model build_model_iv(const CatalogSpec& spec) {
    require_unit_interval(spec);
    const SignSet sign(spec, "ab");
    const int a = sign('a'), b = sign('b');
    ResponseTable responses;
    responses.pairing = Pairing::FullyLocal;
    responses.rows = {{a, a, a, a, 1, 1}, {-b, b, b, -b, 1, 1}};
    const Rational p = spec.p;
    ContextDistribution dist;
    dist.columns.emplace(Context::full(1, 0, 0), std::vector<Rational>{1, 0});
    dist.columns.emplace(Context::full(0, 1, 0), std::vector<Rational>{1 - p, p});
    dist.columns.emplace(Context::full(0, 0, 1), std::vector<Rational>{1, 0});
    dist.columns.emplace(Context::full(1, 1, 1), std::vector<Rational>{1 - p, p});
    return build_model(std::move(responses), std::move(dist), "model IV");
}

Model build_model_v(const CatalogSpec& spec) {
    require_unit_interval(spec);
    const SignSet sign(spec, "abcde");
    const int a = sign('a'), b = sign('b'), c = sign('c'), d = sign('d'), e = sign('e');
    ResponseTable responses;
    responses.pairing = Pairing::JointAB;
    responses.rows = {{a, a, a, -a, a, a},
                      {b, b, -b, b, b, b},
                      {c, -c, c, -c, c, c},
                      {-d, d, d, d, d, -d},
                      {e, e, e, e, e, -e}};
    const std::map<Context, std::size_t> row_for_context = {
        {Context::full(0, 0, 0), 1}, {Context::full(0, 0, 1), 1},
        {Context::full(0, 1, 0), 3}, {Context::full(0, 1, 1), 3},
        {Context::full(1, 0, 0), 4}, {Context::full(1, 0, 1), 4},
        {Context::full(1, 1, 0), 2}, {Context::full(1, 1, 1), 2}};
    return build_model(std::move(responses), full_grid_distribution(5, row_for_context, spec.p),
                       "model V");
}

} // namespace

Model build_catalog_model(const CatalogSpec& spec) {
    switch (spec.id) {
    case CatalogId::I: return build_model_i(spec);
    case CatalogId::II: return build_model_ii(spec);
    case CatalogId::III: return build_model_iii(spec);
    case CatalogId::IV: return build_model_iv(spec);
    case CatalogId::V: return build_model_v(spec);
    }
    throw Error("invalid catalog id");
}

CatalogClaims expected_claims(const CatalogSpec& spec) {
    CatalogClaims claims;
    switch (spec.id) {
    case CatalogId::I:
        claims.target = InequalityKind::Mermin;
        claims.s = 2 + 2 * spec.p1 + 2 * spec.p2;
        claims.measures = {{MeasureId::M1, spec.p1}, {MeasureId::M2, 2 * spec.p2}};
        claims.measures_via_completion = true;
        break;
    case CatalogId::II:
        claims.target = InequalityKind::Svetlichny;
        claims.s = 4 + 4 * spec.p;
        claims.measures = {{MeasureId::M1, 2 * spec.p}};
        break;
    case CatalogId::III:
        claims.target = InequalityKind::NS2_99;
        claims.s = 3 + 2 * spec.p;
        claims.measures = {{MeasureId::M3, 2 * spec.p}};
        break;
    case CatalogId::IV:
        claims.target = InequalityKind::Mermin;
        claims.s = 2 + 2 * spec.p;
        claims.measures = {{MeasureId::M12, 2 * spec.p}};
        break;
    case CatalogId::V:
        claims.target = InequalityKind::Svetlichny;
        claims.s = 4 + 4 * spec.p;
        claims.measures = {{MeasureId::M12, 2 * spec.p}};
        break;
    }
    return claims;
}

} // namespace mdbell
