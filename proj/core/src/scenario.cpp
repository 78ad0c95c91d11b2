#include "mdbell/scenario.hpp"

#include <algorithm>

namespace mdbell {

std::string to_string(Pairing pairing) {
    switch (pairing) {
    case Pairing::FullyLocal: return "FullyLocal";
    case Pairing::JointAB: return "JointAB";
    case Pairing::JointAC: return "JointAC";
    case Pairing::JointBC: return "JointBC";
    }
    throw Error("invalid pairing value");
}

Pairing parse_pairing(std::string_view text) {
    if (text == "FullyLocal") return Pairing::FullyLocal;
    if (text == "JointAB") return Pairing::JointAB;
    if (text == "JointAC") return Pairing::JointAC;
    if (text == "JointBC") return Pairing::JointBC;
    throw Error("unknown pairing '" + std::string(text) +
                "', expected FullyLocal, JointAB, JointAC, or JointBC");
}

namespace {

bool setting_ok(const std::optional<int>& s) {
    return !s || *s == 0 || *s == 1;
}

} // namespace

bool Context::is_valid() const {
    return setting_ok(x) && setting_ok(y) && setting_ok(z) && (is_full() || is_pair());
}

Context Context::full(int x, int y, int z) {
    Context ctx{x, y, z};
    if (!ctx.is_valid()) throw Error("full context settings must be 0 or 1");
    return ctx;
}

Context Context::pair_xy(int x, int y) {
    Context ctx{x, y, std::nullopt};
    if (!ctx.is_valid()) throw Error("pair context settings must be 0 or 1");
    return ctx;
}

Context Context::pair_xz(int x, int z) {
    Context ctx{x, std::nullopt, z};
    if (!ctx.is_valid()) throw Error("pair context settings must be 0 or 1");
    return ctx;
}

Context Context::pair_yz(int y, int z) {
    Context ctx{std::nullopt, y, z};
    if (!ctx.is_valid()) throw Error("pair context settings must be 0 or 1");
    return ctx;
}

Context Context::parse(std::string_view text) {
    Context ctx;
    std::size_t i = 0;
    auto take = [&](char letter) -> std::optional<int> {
        if (i < text.size() && text[i] == letter) {
            ++i;
            if (i < text.size() && text[i] == '\'') {
                ++i;
                return 1;
            }
            return 0;
        }
        return std::nullopt;
    };
    ctx.x = take('x');
    ctx.y = take('y');
    ctx.z = take('z');
    if (i != text.size() || !ctx.is_valid())
        throw Error("not a context: '" + std::string(text) +
                    "' (expected at least two of x, y, z in order, each optionally primed)");
    return ctx;
}

std::string Context::to_string() const {
    std::string s;
    auto put = [&](char letter, const std::optional<int>& v) {
        if (!v) return;
        s += letter;
        if (*v == 1) s += '\'';
    };
    put('x', x);
    put('y', y);
    put('z', z);
    return s;
}

const std::array<Context, 8>& all_full_contexts() {
    static const std::array<Context, 8> fulls = [] {
        std::array<Context, 8> a;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    a[4 * x + 2 * y + z] = Context::full(x, y, z);
        return a;
    }();
    return fulls;
}

int ResponseTable::full_product(std::size_t lam, const Context& ctx) const {
    if (!ctx.is_full()) throw Error("full_product requires a full context");
    const auto& r = rows.at(lam);
    int x = *ctx.x, y = *ctx.y, z = *ctx.z;
    switch (pairing) {
    case Pairing::FullyLocal: return r[x] * r[2 + y] * r[4 + z];
    case Pairing::JointAB: return r[2 * x + y] * r[4 + z];
    case Pairing::JointAC: return r[2 * x + z] * r[4 + y];
    case Pairing::JointBC: return r[2 * y + z] * r[4 + x];
    }
    throw Error("invalid pairing value");
}

std::optional<int> ResponseTable::pair_product(std::size_t lam, const Context& ctx) const {
    if (!ctx.is_pair()) throw Error("pair_product requires a pair context");
    const auto& r = rows.at(lam);
    if (pairing == Pairing::FullyLocal) {
        if (!ctx.z) return r[*ctx.x] * r[2 + *ctx.y];
        if (!ctx.y) return r[*ctx.x] * r[4 + *ctx.z];
        return r[2 + *ctx.y] * r[4 + *ctx.z];
    }
    if (pairing == Pairing::JointAB && !ctx.z) return r[2 * *ctx.x + *ctx.y];
    if (pairing == Pairing::JointAC && !ctx.y) return r[2 * *ctx.x + *ctx.z];
    if (pairing == Pairing::JointBC && !ctx.x) return r[2 * *ctx.y + *ctx.z];
    return std::nullopt;
}

std::vector<std::string> response_column_names(Pairing pairing) {
    switch (pairing) {
    case Pairing::FullyLocal:
        return {"A0", "A1", "B0", "B1", "C0", "C1"};
    case Pairing::JointAB:
        return {"A0B0", "A0B1", "A1B0", "A1B1", "C0", "C1"};
    case Pairing::JointAC:
        return {"A0C0", "A0C1", "A1C0", "A1C1", "B0", "B1"};
    case Pairing::JointBC:
        return {"B0C0", "B0C1", "B1C0", "B1C1", "A0", "A1"};
    }
    throw Error("invalid pairing value");
}

const std::vector<Rational>& ContextDistribution::at(const Context& ctx) const {
    auto it = columns.find(ctx);
    if (it == columns.end())
        throw Error("context " + ctx.to_string() + " not supplied by the model");
    return it->second;
}

std::size_t ContextDistribution::dimension() const {
    return columns.empty() ? 0 : columns.begin()->second.size();
}

Model build_model(ResponseTable responses, ContextDistribution distributions,
                  std::string label) {
    if (responses.rows.empty()) throw Error("response table has no rows");
    for (std::size_t lam = 0; lam < responses.rows.size(); ++lam)
        for (std::size_t k = 0; k < 6; ++k)
            if (responses.rows[lam][k] != 1 && responses.rows[lam][k] != -1)
                throw Error("response entry at row " + std::to_string(lam + 1) +
                            ", column " + std::to_string(k + 1) + " is " +
                            std::to_string(responses.rows[lam][k]) +
                            ", expected +1 or -1");
    for (const auto& [ctx, column] : distributions.columns) {
        if (!ctx.is_valid())
            throw Error("invalid context key in distribution map");
        if (column.size() != responses.rows.size())
            throw Error("distribution for context " + ctx.to_string() + " has " +
                        std::to_string(column.size()) + " entries, expected " +
                        std::to_string(responses.rows.size()));
        Rational sum = 0;
        for (std::size_t lam = 0; lam < column.size(); ++lam) {
            if (column[lam] < 0)
                throw Error("negative probability " + to_string(column[lam]) +
                            " for context " + ctx.to_string() + " at row " +
                            std::to_string(lam + 1));
            sum += column[lam];
        }
        if (sum != 1)
            throw Error("distribution for context " + ctx.to_string() +
                        " sums to " + to_string(sum) + ", expected 1");
        if (ctx.is_pair()) {
            bool grouped = true;
            switch (responses.pairing) {
            case Pairing::FullyLocal: grouped = true; break;
            case Pairing::JointAB: grouped = !ctx.z; break;
            case Pairing::JointAC: grouped = !ctx.y; break;
            case Pairing::JointBC: grouped = !ctx.x; break;
            }
            if (!grouped)
                throw Error("pair context " + ctx.to_string() +
                            " is not grouped by pairing " + to_string(responses.pairing));
        }
    }
    return Model{std::move(responses), std::move(distributions), std::move(label)};
}

bool is_complete(const Model& model) {
    for (const auto& [ctx, column] : model.distributions.columns)
        if (!ctx.is_full()) return false;
    for (const auto& ctx : all_full_contexts())
        if (!model.distributions.has(ctx)) return false;
    return true;
}

namespace {

int outcome_index(int a, int b, int c) {
    return 4 * (a < 0) + 2 * (b < 0) + (c < 0);
}

} // namespace

const Rational& Behavior::prob(int a, int b, int c, int x, int y, int z) const {
    return p[x][y][z][outcome_index(a, b, c)];
}

Rational& Behavior::prob(int a, int b, int c, int x, int y, int z) {
    return p[x][y][z][outcome_index(a, b, c)];
}

Behavior behavior(const Model& model) {
    for (const auto& ctx : all_full_contexts())
        if (!model.distributions.has(ctx))
            throw Error("partial model: missing full context " + ctx.to_string());
    Behavior beh;
    const auto& rt = model.responses;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                Context ctx = Context::full(x, y, z);
                const auto& column = model.distributions.at(ctx);
                for (std::size_t lam = 0; lam < rt.size(); ++lam) {
                    const Rational& w = column[lam];
                    if (w == 0) continue;
                    const auto& r = rt.rows[lam];
                    switch (rt.pairing) {
                    case Pairing::FullyLocal:
                        beh.prob(r[x], r[2 + y], r[4 + z], x, y, z) += w;
                        break;
                    case Pairing::JointAB: {
                        int u = r[2 * x + y], c = r[4 + z];
                        for (int a : {1, -1})
                            beh.prob(a, u * a, c, x, y, z) += w / 2;
                        break;
                    }
                    case Pairing::JointAC: {
                        int u = r[2 * x + z], b = r[4 + y];
                        for (int a : {1, -1})
                            beh.prob(a, b, u * a, x, y, z) += w / 2;
                        break;
                    }
                    case Pairing::JointBC: {
                        int u = r[2 * y + z], a = r[4 + x];
                        for (int b : {1, -1})
                            beh.prob(a, b, u * b, x, y, z) += w / 2;
                        break;
                    }
                    }
                }
            }
    return beh;
}

Rational correlator(const Model& model, const Context& ctx) {
    if (!ctx.is_valid()) throw Error("invalid context");
    const auto& column = model.distributions.at(ctx);
    Rational sum = 0;
    for (std::size_t lam = 0; lam < model.responses.size(); ++lam) {
        int sign;
        if (ctx.is_full()) {
            sign = model.responses.full_product(lam, ctx);
        } else {
            auto pp = model.responses.pair_product(lam, ctx);
            if (!pp)
                throw Error("pair context " + ctx.to_string() +
                            " is not determined under pairing " +
                            to_string(model.responses.pairing));
            sign = *pp;
        }
        sum += column[lam] * sign;
    }
    return sum;
}

namespace {

struct MarginalChecker {
    const Behavior& beh;
    std::vector<NoSignalingViolation>& out;
    std::string prefix;

    // P(outcome of one party | its setting), summed over the other two.
    Rational single(int party, int outcome, int setting, int other1, int other2) const {
        Rational sum = 0;
        for (int o1 : {1, -1})
            for (int o2 : {1, -1}) {
                int a, b, c, x, y, z;
                if (party == 0) { a = outcome; b = o1; c = o2; x = setting; y = other1; z = other2; }
                else if (party == 1) { a = o1; b = outcome; c = o2; y = setting; x = other1; z = other2; }
                else { a = o1; b = o2; c = outcome; z = setting; x = other1; y = other2; }
                sum += beh.prob(a, b, c, x, y, z);
            }
        return sum;
    }

    // P(outcomes of two parties | their settings), summed over the third.
    Rational pair(int absent, int o1, int o2, int s1, int s2, int s3) const {
        Rational sum = 0;
        for (int o3 : {1, -1}) {
            int a, b, c, x, y, z;
            if (absent == 2) { a = o1; b = o2; c = o3; x = s1; y = s2; z = s3; }
            else if (absent == 1) { a = o1; b = o3; c = o2; x = s1; y = s3; z = s2; }
            else { a = o3; b = o1; c = o2; x = s3; y = s1; z = s2; }
            sum += beh.prob(a, b, c, x, y, z);
        }
        return sum;
    }

    void run() {
        static const char* party_outcome[3] = {"a", "b", "c"};
        static const char* party_setting[3] = {"x", "y", "z"};
        static const int other_of[3][2] = {{1, 2}, {0, 2}, {0, 1}};
        auto fmt = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
        for (int party = 0; party < 3; ++party) {
            const char* os[2] = {party_setting[other_of[party][0]],
                                 party_setting[other_of[party][1]]};
            for (int setting = 0; setting < 2; ++setting)
                for (int outcome : {1, -1}) {
                    Rational base = single(party, outcome, setting, 0, 0);
                    for (int o1 = 0; o1 < 2; ++o1)
                        for (int o2 = 0; o2 < 2; ++o2) {
                            if (o1 == 0 && o2 == 0) continue;
                            Rational v = single(party, outcome, setting, o1, o2);
                            if (v != base)
                                out.push_back({prefix + "P(" + party_outcome[party] + "=" +
                                                   fmt(outcome) + "|" + party_setting[party] +
                                                   "=" + std::to_string(setting) + ") at (" +
                                                   os[0] + "=0," + os[1] + "=0) vs (" + os[0] +
                                                   "=" + std::to_string(o1) + "," + os[1] + "=" +
                                                   std::to_string(o2) + ")",
                                               base, v});
                        }
                }
        }
        for (int absent = 2; absent >= 0; --absent) {
            int p1 = absent == 0 ? 1 : 0;
            int p2 = absent == 2 ? 1 : 2;
            for (int s1 = 0; s1 < 2; ++s1)
                for (int s2 = 0; s2 < 2; ++s2)
                    for (int o1 : {1, -1})
                        for (int o2 : {1, -1}) {
                            Rational lhs = pair(absent, o1, o2, s1, s2, 0);
                            Rational rhs = pair(absent, o1, o2, s1, s2, 1);
                            if (lhs != rhs)
                                out.push_back({prefix + "P(" + party_outcome[p1] + "=" +
                                                   fmt(o1) + "," + party_outcome[p2] + "=" +
                                                   fmt(o2) + "|" + party_setting[p1] + "=" +
                                                   std::to_string(s1) + "," + party_setting[p2] +
                                                   "=" + std::to_string(s2) + ") at " +
                                                   party_setting[absent] + "=0 vs " +
                                                   party_setting[absent] + "=1",
                                               lhs, rhs});
                        }
        }
    }
};

} // namespace

NoSignalingReport check_no_signaling(const Behavior& beh) {
    NoSignalingReport report;
    MarginalChecker{beh, report.violations, ""}.run();
    return report;
}

NoSignalingReport check_response_no_signaling(const Model& model) {
    NoSignalingReport report;
    for (std::size_t lam = 0; lam < model.responses.size(); ++lam) {
        ResponseTable single{model.responses.pairing, {model.responses.rows[lam]}};
        ContextDistribution point;
        for (const auto& ctx : all_full_contexts())
            point.columns[ctx] = {Rational(1)};
        Behavior beh = behavior(Model{std::move(single), std::move(point), ""});
        MarginalChecker{beh, report.violations, "row " + std::to_string(lam + 1) + ": "}.run();
    }
    return report;
}

bool ContextConsistencyReport::all_consistent() const {
    return std::all_of(entries.begin(), entries.end(), [](const ContextConsistencyEntry& e) {
        return e.differing_full_contexts.empty();
    });
}

ContextConsistencyReport check_context_consistency(const Model& model) {
    ContextConsistencyReport report;
    for (const auto& [ctx, column] : model.distributions.columns) {
        if (!ctx.is_pair()) continue;
        ContextConsistencyEntry entry{ctx, {}, {}};
        for (int third = 0; third < 2; ++third) {
            Context full = ctx;
            if (!full.x) full.x = third;
            else if (!full.y) full.y = third;
            else full.z = third;
            if (!model.distributions.has(full)) continue;
            if (model.distributions.at(full) == column)
                entry.equal_full_contexts.push_back(full);
            else
                entry.differing_full_contexts.push_back(full);
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace mdbell
