#include "mdbell/cli.hpp"

#include "mdbell/catalog.hpp"
#include "mdbell/dependence.hpp"
#include "mdbell/model_io.hpp"
#include "mdbell/quantum.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace mdbell {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v, int digits) {
    if (v == 0)
        v = 0; // normalize -0
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string shape_name(ScenarioShape shape) {
    return shape == ScenarioShape::OneSided ? "one-sided" : "bipartite";
}

std::string freedom_name(MeasureId id) {
    std::string name = to_string(id);
    name[0] = 'F';
    return name;
}

std::string budgets_text(const std::map<MeasureId, Rational>& budgets) {
    std::string text;
    for (const auto& [id, value] : budgets) {
        if (!text.empty())
            text += "  ";
        text += to_string(id) + " = " + to_string(value);
    }
    return text.empty() ? "none" : text;
}

RelaxationScenario scenario_with_budgets(const RunConfig& config) {
    RelaxationScenario scenario = *config.scenario;
    for (const auto& [id, value] : config.budgets)
        scenario.budgets[id] = value;
    return scenario;
}

int usage_error(std::ostream& err, const std::string& message) {
    err << "error: " << message << '\n';
    return 2;
}

// -------------------------------------------------------------- eval

struct EvalResult {
    std::string path;
    Model model;
    std::vector<std::pair<InequalityKind, std::optional<Rational>>> s_values;
    std::vector<std::pair<InequalityKind, std::string>> s_errors;
    DependenceReport dependence;
    NoSignalingReport response_ns;
    std::optional<NoSignalingReport> behavior_ns;
    std::optional<BoundCheckReport> bound_check;
    bool passed = false;
};

EvalResult eval_one(const RunConfig& config, const std::string& path) {
    EvalResult result;
    result.path = path;
    result.model = load_model(path);

    std::vector<InequalityKind> kinds;
    if (config.inequality)
        kinds = {*config.inequality};
    else
        kinds = {InequalityKind::Mermin, InequalityKind::Svetlichny, InequalityKind::NS2_99};
    for (InequalityKind kind : kinds) {
        if (config.inequality) {
            result.s_values.emplace_back(kind, evaluate(result.model, kind));
        } else {
            try {
                result.s_values.emplace_back(kind, evaluate(result.model, kind));
            } catch (const Error& e) {
                result.s_values.emplace_back(kind, std::nullopt);
                result.s_errors.emplace_back(kind, e.what());
            }
        }
    }

    result.dependence = dependence_report(result.model);
    result.response_ns = check_response_no_signaling(result.model);
    if (is_complete(result.model))
        result.behavior_ns = check_no_signaling(behavior(result.model));
    if (config.scenario && config.inequality)
        result.bound_check = check_model_against_bound(result.model, *config.inequality,
                                                       scenario_with_budgets(config));

    bool any_s = false;
    for (const auto& [kind, value] : result.s_values)
        if (value)
            any_s = true;
    result.passed = any_s && result.response_ns.passed() &&
                    (!result.behavior_ns || result.behavior_ns->passed()) &&
                    (!result.bound_check || result.bound_check->passed);
    return result;
}

void print_eval_text(const EvalResult& r, std::ostream& out) {
    out << "== " << (r.model.label.empty() ? "(unlabeled)" : r.model.label) << " (" << r.path
        << ")\n";
    out << "pairing: " << to_string(r.model.responses.pairing) << '\n';
    out << "rows: " << r.model.responses.size() << '\n';
    out << "complete: " << (is_complete(r.model) ? "yes" : "no") << '\n';
    for (const auto& [kind, value] : r.s_values) {
        out << "S[" << to_string(kind) << "] = ";
        if (value)
            out << to_string(*value);
        else
            out << "n/a";
        out << '\n';
    }
    for (const auto& [kind, message] : r.s_errors)
        out << "note: " << to_string(kind) << ": " << message << '\n';

    const auto cell = [](const std::optional<Rational>& v) {
        return v ? to_string(*v) : std::string("n/a");
    };
    out << "dependence: M = " << cell(r.dependence.overall);
    static const MeasureId one_sided[] = {MeasureId::M1, MeasureId::M2, MeasureId::M3};
    static const MeasureId bipartite[] = {MeasureId::M12, MeasureId::M23, MeasureId::M13};
    for (int i = 0; i < 3; ++i)
        out << "  " << to_string(one_sided[i]) << " = " << cell(r.dependence.one_sided[i]);
    for (int i = 0; i < 3; ++i)
        out << "  " << to_string(bipartite[i]) << " = " << cell(r.dependence.bipartite[i]);
    out << '\n';
    const auto fcell = [](const std::optional<Rational>& v) {
        return v ? to_string(freedom(*v)) : std::string("n/a");
    };
    out << "freedom:    F = " << fcell(r.dependence.overall);
    for (int i = 0; i < 3; ++i)
        out << "  " << freedom_name(one_sided[i]) << " = " << fcell(r.dependence.one_sided[i]);
    for (int i = 0; i < 3; ++i)
        out << "  " << freedom_name(bipartite[i]) << " = " << fcell(r.dependence.bipartite[i]);
    out << '\n';
    if (r.dependence.lower_bound_only)
        out << "note: partial model, dependence values are lower bounds\n";

    out << "no-signaling responses: " << (r.response_ns.passed() ? "pass" : "FAIL") << '\n';
    for (const auto& v : r.response_ns.violations)
        out << "  violation: " << v.identity << ": " << to_string(v.lhs)
            << " != " << to_string(v.rhs) << '\n';
    if (r.behavior_ns) {
        out << "no-signaling behavior: " << (r.behavior_ns->passed() ? "pass" : "FAIL") << '\n';
        for (const auto& v : r.behavior_ns->violations)
            out << "  violation: " << v.identity << ": " << to_string(v.lhs)
                << " != " << to_string(v.rhs) << '\n';
        if (!r.behavior_ns->passed() && r.response_ns.passed())
            out << "note: the response functions never signal; the violations come from "
                   "setting-dependent hidden-variable weights\n";
    } else {
        out << "no-signaling behavior: n/a (partial model)\n";
    }
    if (r.bound_check) {
        const BoundCheckReport& b = *r.bound_check;
        out << "bound check: |S| = " << to_string(boost::multiprecision::abs(b.s))
            << (b.passed ? " <= " : " > ") << to_string(b.bound) << " ("
            << (b.passed ? "pass" : "FAIL") << (b.tight ? ", tight" : "")
            << (b.used_completion ? ", via completion" : "") << ")\n";
    }
    out << "verdict: " << (r.passed ? "pass" : "FAIL") << '\n';
}

ordered_json eval_json(const EvalResult& r) {
    ordered_json j;
    j["path"] = r.path;
    j["label"] = r.model.label;
    j["pairing"] = to_string(r.model.responses.pairing);
    j["rows"] = r.model.responses.size();
    j["complete"] = is_complete(r.model);
    ordered_json s = ordered_json::object();
    for (const auto& [kind, value] : r.s_values)
        s[to_string(kind)] = value ? ordered_json(to_string(*value)) : ordered_json(nullptr);
    j["S"] = s;
    if (!r.s_errors.empty()) {
        ordered_json errs = ordered_json::object();
        for (const auto& [kind, message] : r.s_errors)
            errs[to_string(kind)] = message;
        j["evaluation_errors"] = errs;
    }
    j["dependence"] = ordered_json::parse(r.dependence.to_json());
    j["no_signaling"]["responses"] = r.response_ns.passed();
    j["no_signaling"]["behavior"] =
        r.behavior_ns ? ordered_json(r.behavior_ns->passed()) : ordered_json(nullptr);
    j["bound_check"] =
        r.bound_check ? ordered_json::parse(r.bound_check->to_json()) : ordered_json(nullptr);
    j["pass"] = r.passed;
    return j;
}

int run_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.inputs.empty())
        return usage_error(err, "eval needs at least one model file");
    if (config.format == OutputFormat::Csv)
        return usage_error(err, "csv output is not available for eval");
    if (config.scenario && !config.inequality)
        return usage_error(err, "eval with --scenario needs --inequality");

    bool all_passed = true;
    std::vector<EvalResult> results;
    for (const std::string& path : config.inputs) {
        results.push_back(eval_one(config, path));
        all_passed = all_passed && results.back().passed;
    }
    if (config.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["command"] = "eval";
        doc["models"] = ordered_json::array();
        for (const EvalResult& r : results)
            doc["models"].push_back(eval_json(r));
        doc["passed"] = all_passed;
        out << doc.dump(2) << '\n';
    } else {
        for (const EvalResult& r : results)
            print_eval_text(r, out);
    }
    return all_passed ? 0 : 1;
}

// -------------------------------------------------------------- tables

struct CheckRow {
    std::string model;
    std::string parameters;
    std::string quantity;
    std::string value;
    std::string expected;
    bool pass = false;
};

void append_claim_rows(const CatalogSpec& spec, const std::string& parameters,
                       std::vector<CheckRow>& rows) {
    const Model model = build_catalog_model(spec);
    const CatalogClaims claims = expected_claims(spec);
    const Rational s = evaluate(model, claims.target);
    rows.push_back({to_string(spec.id), parameters, "S", to_string(s), to_string(claims.s),
                    s == claims.s});
    if (claims.measures_via_completion)
        return;
    for (const auto& [id, expected] : claims.measures) {
        const std::optional<Rational> value = measure_value(model, id);
        rows.push_back({to_string(spec.id), parameters, to_string(id),
                        value ? to_string(*value) : "n/a", to_string(expected),
                        value && *value == expected});
    }
}

int run_tables(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.inputs.empty())
        return usage_error(err, "tables takes no input files");
    const GridSpec grid =
        config.grid ? *config.grid : GridSpec{Rational(0), Rational(1), Rational(1) / 8};
    const std::vector<Rational> ps = grid.values();

    std::vector<CheckRow> rows;
    for (const Rational& p1 : ps)
        for (const Rational& p2 : ps) {
            if (p1 + p2 > 1)
                continue;
            append_claim_rows(CatalogSpec::model_i(p1, p2),
                              "p1=" + to_string(p1) + " p2=" + to_string(p2), rows);
        }

    struct CompletionCase {
        Rational p1, p2;
        bool feasible;
    };
    const CompletionCase cases[] = {
        {1, 0, false},
        {0, 1, true},
        {Rational(1) / 2, Rational(1) / 2, true},
    };
    for (const CompletionCase& c : cases) {
        const Model model = build_catalog_model(CatalogSpec::model_i(c.p1, c.p2));
        const std::vector<std::pair<MeasureId, Rational>> budgets = {
            {MeasureId::M1, c.p1}, {MeasureId::M2, 2 * c.p2}};
        const CompletionResult result = complete_contexts(model, budgets, config.mode);
        rows.push_back({"I", "p1=" + to_string(c.p1) + " p2=" + to_string(c.p2), "completion",
                        result.feasible ? "feasible" : "infeasible",
                        c.feasible ? "feasible" : "infeasible", result.feasible == c.feasible});
    }

    for (CatalogId id : {CatalogId::II, CatalogId::III, CatalogId::IV, CatalogId::V})
        for (const Rational& p : ps)
            append_claim_rows(CatalogSpec::with_p(id, p), "p=" + to_string(p), rows);

    std::size_t failed = 0;
    for (const CheckRow& row : rows)
        if (!row.pass)
            ++failed;

    if (config.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["command"] = "tables";
        doc["checks"] = ordered_json::array();
        for (const CheckRow& row : rows) {
            ordered_json j;
            j["model"] = row.model;
            j["parameters"] = row.parameters;
            j["quantity"] = row.quantity;
            j["value"] = row.value;
            j["expected"] = row.expected;
            j["pass"] = row.pass;
            doc["checks"].push_back(j);
        }
        doc["failed"] = failed;
        doc["passed"] = failed == 0;
        out << doc.dump(2) << '\n';
    } else if (config.format == OutputFormat::Csv) {
        out << "model,parameters,quantity,value,expected,pass\n";
        for (const CheckRow& row : rows)
            out << row.model << ',' << row.parameters << ',' << row.quantity << ',' << row.value
                << ',' << row.expected << ',' << (row.pass ? "true" : "false") << '\n';
    } else {
        out << std::left << std::setw(7) << "model" << std::setw(17) << "parameters"
            << std::setw(12) << "quantity" << std::setw(13) << "value" << std::setw(13)
            << "expected" << "verdict" << '\n';
        for (const CheckRow& row : rows)
            out << std::left << std::setw(7) << row.model << std::setw(17) << row.parameters
                << std::setw(12) << row.quantity << std::setw(13) << row.value << std::setw(13)
                << row.expected << (row.pass ? "pass" : "FAIL") << '\n';
        out << "checks: " << rows.size() << "  failed: " << failed << '\n';
    }
    return failed == 0 ? 0 : 1;
}

// -------------------------------------------------------------- bounds

int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.inputs.empty())
        return usage_error(err, "bounds takes no input files");
    const std::vector<Rational> grid =
        config.grid ? config.grid->values()
                    : std::vector<Rational>{0, Rational(1) / 2, 1, Rational(3) / 2, 2};

    std::vector<std::pair<InequalityKind, ScenarioShape>> jobs;
    const std::vector<InequalityKind> kinds =
        config.inequality ? std::vector<InequalityKind>{*config.inequality}
                          : std::vector<InequalityKind>{InequalityKind::Mermin,
                                                        InequalityKind::Svetlichny,
                                                        InequalityKind::NS2_99};
    for (InequalityKind kind : kinds) {
        if (config.scenario) {
            if (kind == InequalityKind::NS2_99 &&
                config.scenario->shape == ScenarioShape::Bipartite) {
                if (config.inequality)
                    return usage_error(err, "the ns2 inequality has no bipartite relaxed bound");
                continue;
            }
            jobs.emplace_back(kind, config.scenario->shape);
        } else {
            jobs.emplace_back(kind, ScenarioShape::OneSided);
            if (kind != InequalityKind::NS2_99)
                jobs.emplace_back(kind, ScenarioShape::Bipartite);
        }
    }

    LpOptions options;
    options.mode = config.mode;
    options.tie_pair_blocks = config.tie_pair_blocks;
    std::vector<SoundnessSummary> summaries;
    for (const auto& [kind, shape] : jobs)
        summaries.push_back(verify_bound_soundness(kind, shape, config.l_cap, grid, options));

    if (config.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["command"] = "bounds";
        doc["summaries"] = ordered_json::array();
        for (const SoundnessSummary& summary : summaries)
            doc["summaries"].push_back(ordered_json::parse(summary.to_json()));
        doc["passed"] = true;
        out << doc.dump(2) << '\n';
    } else if (config.format == OutputFormat::Csv) {
        out << "inequality,scenario,l,budget,max_s,bound,attained\n";
        for (const SoundnessSummary& summary : summaries)
            for (const SoundnessPoint& point : summary.points)
                out << to_string(summary.kind) << ',' << shape_name(summary.shape) << ','
                    << summary.l << ',' << to_string(point.budget) << ','
                    << to_string(point.max_s) << ',' << to_string(point.bound) << ','
                    << (point.attained ? "true" : "false") << '\n';
    } else {
        for (const SoundnessSummary& summary : summaries) {
            out << "== " << to_string(summary.kind) << ' ' << shape_name(summary.shape)
                << " L=" << summary.l << '\n';
            out << "strategies: " << summary.strategies_enumerated
                << " (deduplicated)  LPs solved: " << summary.lp_count << '\n';
            out << std::left << std::setw(9) << "budget" << std::setw(9) << "max_S"
                << std::setw(9) << "bound" << "attained" << '\n';
            for (const SoundnessPoint& point : summary.points)
                out << std::left << std::setw(9) << to_string(point.budget) << std::setw(9)
                    << to_string(point.max_s) << std::setw(9) << to_string(point.bound)
                    << (point.attained ? "yes" : "no") << '\n';
        }
        out << "all bounds sound\n";
    }
    return 0;
}

// -------------------------------------------------------------- quantum

int run_quantum(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.inputs.empty())
        return usage_error(err, "quantum takes no input files");
    if (config.format == OutputFormat::Csv)
        return usage_error(err, "csv output is not available for quantum");

    struct QuantumRow {
        InequalityKind kind;
        QuantumOptimum optimum;
        double target = 0;
        bool pass = false;
    };
    std::vector<QuantumRow> rows;
    bool all_passed = true;
    for (InequalityKind kind :
         {InequalityKind::Mermin, InequalityKind::Svetlichny, InequalityKind::NS2_99}) {
        QuantumRow row;
        row.kind = kind;
        row.optimum = optimize_settings(kind);
        row.target = inequality_spec(kind).quantum_ghz_value;
        row.pass = std::abs(row.optimum.s - row.target) <= 1e-6;
        all_passed = all_passed && row.pass;
        rows.push_back(std::move(row));
    }

    if (config.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["command"] = "quantum";
        doc["results"] = ordered_json::array();
        for (const QuantumRow& row : rows) {
            ordered_json j;
            j["inequality"] = to_string(row.kind);
            j["S"] = row.optimum.s;
            j["target"] = row.target;
            j["pass"] = row.pass;
            j["settings"] = ordered_json::parse(settings_to_json(row.optimum.settings));
            doc["results"].push_back(j);
        }
        doc["passed"] = all_passed;
        out << doc.dump(2) << '\n';
    } else {
        for (const QuantumRow& row : rows) {
            out << std::left << std::setw(12) << to_string(row.kind)
                << "S = " << format_double(row.optimum.s, 9)
                << "  target = " << format_double(row.target, 9) << "  "
                << (row.pass ? "pass" : "FAIL") << '\n';
            const auto print_party = [&](const char* name, const std::array<Vec3, 2>& dirs) {
                for (int setting = 0; setting < 2; ++setting)
                    out << "  " << name << setting << " = [" << format_double(dirs[setting].x, 9)
                        << ", " << format_double(dirs[setting].y, 9) << ", "
                        << format_double(dirs[setting].z, 9) << "]\n";
            };
            print_party("A", row.optimum.settings.a);
            print_party("B", row.optimum.settings.b);
            print_party("C", row.optimum.settings.c);
        }
        out << "verdict: " << (all_passed ? "pass" : "FAIL") << '\n';
    }
    return all_passed ? 0 : 1;
}

// -------------------------------------------------------------- search

int run_search(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.inputs.size() != 1)
        return usage_error(err, "search needs exactly one strategy file");
    if (!config.inequality)
        return usage_error(err, "search needs --inequality");
    if (!config.scenario)
        return usage_error(err, "search needs --scenario");
    if (config.format == OutputFormat::Csv)
        return usage_error(err, "csv output is not available for search");

    const ResponseTable strategy = load_strategy(config.inputs[0]);
    LpOptions options;
    options.mode = config.mode;
    options.tie_pair_blocks = config.tie_pair_blocks;
    const BoundCertificate certificate =
        certify_strategy(strategy, *config.inequality, scenario_with_budgets(config), options);

    if (config.format == OutputFormat::Json) {
        out << ordered_json::parse(certificate.to_json()).dump(2) << '\n';
    } else {
        out << "inequality: " << to_string(certificate.kind) << '\n';
        out << "scenario: " << certificate.scenario.to_string() << '\n';
        out << "budgets: " << budgets_text(certificate.scenario.budgets) << '\n';
        if (certificate.lp_value_is_exact)
            out << "lp_max_S = " << to_string(certificate.lp_value) << '\n';
        else
            out << "lp_max_S = " << format_double(certificate.lp_value_real, 9)
                << " (floating point)\n";
        out << "bound = " << to_string(certificate.bound) << '\n';
        out << "sound: " << (certificate.sound ? "yes" : "no") << '\n';
        out << "tight: " << (certificate.tight ? "yes" : "no") << '\n';
    }
    return certificate.sound ? 0 : 1;
}

// -------------------------------------------------------------- complete

int run_complete(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.inputs.size() != 1)
        return usage_error(err, "complete needs exactly one model file");
    if (config.budgets.empty())
        return usage_error(err, "complete needs at least one --budget");
    if (config.format == OutputFormat::Csv)
        return usage_error(err, "csv output is not available for complete");

    const Model model = load_model(config.inputs[0]);
    const CompletionResult result = complete_contexts(model, config.budgets, config.mode);

    if (config.format == OutputFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["command"] = "complete";
        ordered_json budgets = ordered_json::object();
        for (const auto& [id, value] : config.budgets)
            budgets[to_string(id)] = to_string(value);
        doc["budgets"] = budgets;
        doc["feasible"] = result.feasible;
        doc["witness"] =
            result.witness ? ordered_json(write_model(*result.witness)) : ordered_json(nullptr);
        out << doc.dump(2) << '\n';
    } else if (result.feasible) {
        out << write_model(*result.witness);
        err << "completion feasible\n";
    } else {
        err << "completion infeasible within the given budgets\n";
    }
    return result.feasible ? 0 : 1;
}

} // namespace

std::string to_string(Command command) {
    switch (command) {
    case Command::Eval: return "eval";
    case Command::Tables: return "tables";
    case Command::Bounds: return "bounds";
    case Command::Quantum: return "quantum";
    case Command::Search: return "search";
    case Command::Complete: return "complete";
    }
    throw Error("unknown command");
}

Command parse_command(std::string_view text) {
    if (text == "eval") return Command::Eval;
    if (text == "tables") return Command::Tables;
    if (text == "bounds") return Command::Bounds;
    if (text == "quantum") return Command::Quantum;
    if (text == "search") return Command::Search;
    if (text == "complete") return Command::Complete;
    throw Error("unknown command '" + std::string(text) + "'");
}

std::string to_string(OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    }
    throw Error("unknown format");
}

OutputFormat parse_format(std::string_view text) {
    if (text == "text") return OutputFormat::Text;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw Error("unknown format '" + std::string(text) + "', expected text, json, or csv");
}

std::vector<Rational> GridSpec::values() const {
    if (step <= 0)
        throw Error("grid step must be positive, got " + to_string(step));
    if (hi < lo)
        throw Error("grid upper end " + to_string(hi) + " is below lower end " + to_string(lo));
    std::vector<Rational> result;
    for (Rational v = lo; v <= hi; v += step)
        result.push_back(v);
    return result;
}

GridSpec GridSpec::parse(std::string_view text) {
    const std::string s(text);
    const std::size_t first = s.find(':');
    const std::size_t second = first == std::string::npos ? std::string::npos
                                                          : s.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        s.find(':', second + 1) != std::string::npos)
        throw Error("grid must be written lo:hi:step, got '" + s + "'");
    GridSpec grid;
    grid.lo = parse_rational(s.substr(0, first));
    grid.hi = parse_rational(s.substr(first + 1, second - first - 1));
    grid.step = parse_rational(s.substr(second + 1));
    grid.values(); // validate
    return grid;
}

std::pair<MeasureId, Rational> parse_budget(std::string_view text) {
    const std::string s(text);
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
        throw Error("budget must be written MEASURE=VALUE, got '" + s + "'");
    return {parse_measure(s.substr(0, eq)), parse_rational(s.substr(eq + 1))};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* report = &out;
    if (!config.output_path.empty()) {
        file.open(config.output_path, std::ios::binary);
        if (!file)
            return usage_error(err, "cannot write file '" + config.output_path + "'");
        report = &file;
    }
    try {
        switch (config.command) {
        case Command::Eval: return run_eval(config, *report, err);
        case Command::Tables: return run_tables(config, *report, err);
        case Command::Bounds: return run_bounds(config, *report, err);
        case Command::Quantum: return run_quantum(config, *report, err);
        case Command::Search: return run_search(config, *report, err);
        case Command::Complete: return run_complete(config, *report, err);
        }
        return usage_error(err, "unknown command");
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace mdbell
