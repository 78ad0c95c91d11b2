#include "mdbell/bound_search.hpp"
#include "mdbell/catalog.hpp"
#include "mdbell/dependence.hpp"
#include "mdbell/inequalities.hpp"
#include "mdbell/quantum.hpp"
#include "mdbell/scenario.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace mdbell;

Model sample_model() {
    return build_catalog_model(CatalogSpec::with_p(CatalogId::II, Rational(1) / 4));
}

void bm_behavior(benchmark::State& state) {
    const Model model = sample_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(behavior(model));
}
BENCHMARK(bm_behavior);

void bm_evaluate(benchmark::State& state) {
    const Model model = sample_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate(model, InequalityKind::Svetlichny));
}
BENCHMARK(bm_evaluate);

void bm_measure_overall(benchmark::State& state) {
    const Model model = sample_model();
    for (auto _ : state)
        benchmark::DoNotOptimize(measure_value(model, MeasureId::M));
}
BENCHMARK(bm_measure_overall);

RelaxationScenario half_budgets() {
    return RelaxationScenario::one_sided(Party::A, {{MeasureId::M1, Rational(1) / 2},
                                                    {MeasureId::M2, Rational(1) / 2},
                                                    {MeasureId::M3, Rational(1) / 2}});
}

ResponseTable lp_strategy() {
    return build_catalog_model(CatalogSpec::model_i(Rational(1) / 2, Rational(1) / 2))
        .responses;
}

void bm_lp_exact(benchmark::State& state) {
    const ResponseTable strategy = lp_strategy();
    const RelaxationScenario scenario = half_budgets();
    for (auto _ : state)
        benchmark::DoNotOptimize(lp_max_s(strategy, InequalityKind::Svetlichny, scenario));
}
BENCHMARK(bm_lp_exact);

void bm_lp_real(benchmark::State& state) {
    const ResponseTable strategy = lp_strategy();
    const RelaxationScenario scenario = half_budgets();
    LpOptions options;
    options.mode = NumericMode::Real;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            lp_max_s_solution(strategy, InequalityKind::Svetlichny, scenario, options));
}
BENCHMARK(bm_lp_real);

void bm_complete_contexts(benchmark::State& state) {
    const Model model =
        build_catalog_model(CatalogSpec::model_i(Rational(1) / 2, Rational(1) / 2));
    const std::vector<std::pair<MeasureId, Rational>> budgets = {
        {MeasureId::M1, Rational(1) / 2}, {MeasureId::M2, 1}};
    for (auto _ : state)
        benchmark::DoNotOptimize(complete_contexts(model, budgets));
}
BENCHMARK(bm_complete_contexts);

void bm_optimize_settings(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_settings(InequalityKind::Svetlichny));
}
BENCHMARK(bm_optimize_settings);

} // namespace

BENCHMARK_MAIN();
