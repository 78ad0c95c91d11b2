#include "mdbell/simplex.hpp"

#include <doctest/doctest.h>

using namespace mdbell;

namespace {

LinearProgram::Row row(std::vector<Rational> coeffs, LpSense sense, Rational rhs) {
    return {std::move(coeffs), sense, std::move(rhs)};
}

} // namespace

TEST_CASE("one-variable maximum") {
    LinearProgram lp;
    lp.objective = {1};
    lp.rows = {row({1}, LpSense::LessEq, 3)};
    const LpSolution sol = simplex_solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.exact);
    CHECK(sol.value == 3);
    CHECK(sol.x == std::vector<Rational>{3});
}

TEST_CASE("two variables with a shared budget") {
    // max 3x + 2y st x + y <= 4, x <= 2
    LinearProgram lp;
    lp.objective = {3, 2};
    lp.rows = {row({1, 1}, LpSense::LessEq, 4), row({1, 0}, LpSense::LessEq, 2)};
    const LpSolution sol = simplex_solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 10);
    CHECK(sol.x == std::vector<Rational>{2, 2});
}

TEST_CASE("equality constraints force the simplex face") {
    // max x - y on the segment x + y == 1
    LinearProgram lp;
    lp.objective = {1, -1};
    lp.rows = {row({1, 1}, LpSense::Eq, 1)};
    const LpSolution sol = simplex_solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 1);
    CHECK(sol.x == std::vector<Rational>{1, 0});
}

TEST_CASE("fractional optimum stays exact") {
    // max x st 3x <= 1
    LinearProgram lp;
    lp.objective = {1};
    lp.rows = {row({3}, LpSense::LessEq, 1)};
    const LpSolution sol = simplex_solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == Rational(1) / 3);
}

TEST_CASE("infeasible systems are reported") {
    LinearProgram lp;
    lp.objective = {1};
    lp.rows = {row({1}, LpSense::LessEq, 1), row({1}, LpSense::Eq, 2)};
    CHECK(simplex_solve(lp).status == LpStatus::Infeasible);

    LinearProgram negative;
    negative.objective = {1};
    negative.rows = {row({1}, LpSense::LessEq, -1)};
    CHECK(simplex_solve(negative).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded directions are reported") {
    LinearProgram lp;
    lp.objective = {1, 0};
    lp.rows = {row({0, 1}, LpSense::LessEq, 1)};
    CHECK(simplex_solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("degenerate ties do not cycle") {
    // Klee-Minty style degeneracy: several rows active at the optimum.
    LinearProgram lp;
    lp.objective = {1, 1};
    lp.rows = {row({1, 0}, LpSense::LessEq, 1), row({0, 1}, LpSense::LessEq, 1),
               row({1, 1}, LpSense::LessEq, 2), row({1, -1}, LpSense::LessEq, 0),
               row({-1, 1}, LpSense::LessEq, 0)};
    const LpSolution sol = simplex_solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.value == 2);
}

TEST_CASE("duals certify the optimum") {
    LinearProgram lp;
    lp.objective = {3, 2};
    lp.rows = {row({1, 1}, LpSense::LessEq, 4), row({1, 0}, LpSense::LessEq, 2)};
    const LpSolution sol = simplex_solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    REQUIRE(sol.dual.size() == 2);
    // y^T b == optimal value (strong duality, checked again internally).
    CHECK(sol.dual[0] * 4 + sol.dual[1] * 2 == sol.value);
    CHECK(sol.dual[0] >= 0);
    CHECK(sol.dual[1] >= 0);
}

TEST_CASE("real mode agrees with exact mode") {
    LinearProgram lp;
    lp.objective = {3, 2, -1};
    lp.rows = {row({1, 1, 1}, LpSense::Eq, 1), row({1, 0, 0}, LpSense::LessEq, Rational(1) / 2),
               row({0, 1, 0}, LpSense::LessEq, Rational(2) / 3)};
    const LpSolution exact = simplex_solve(lp, NumericMode::Exact);
    const LpSolution real = simplex_solve(lp, NumericMode::Real);
    REQUIRE(exact.status == LpStatus::Optimal);
    REQUIRE(real.status == LpStatus::Optimal);
    CHECK_FALSE(real.exact);
    CHECK(real.value_real == doctest::Approx(to_double(exact.value)).epsilon(1e-9));
    CHECK(exact.value_real == doctest::Approx(to_double(exact.value)).epsilon(1e-12));
}
