#include "mdbell/simplex.hpp"

#include <string>

namespace mdbell {

namespace {

void validate(const LinearProgram& lp) {
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
        if (lp.rows[i].coeffs.size() != lp.objective.size())
            throw Error("linear program row " + std::to_string(i + 1) + " has " +
                        std::to_string(lp.rows[i].coeffs.size()) +
                        " coefficients, expected " + std::to_string(lp.objective.size()));
}

} // namespace

LpSolution simplex_solve(const LinearProgram& lp, NumericMode mode) {
    validate(lp);
    LpSolution solution;
    std::vector<LpSense> senses;
    senses.reserve(lp.rows.size());
    for (const auto& row : lp.rows) senses.push_back(row.sense);
    if (mode == NumericMode::Exact) {
        std::vector<std::vector<Rational>> coeffs;
        std::vector<Rational> rhs;
        coeffs.reserve(lp.rows.size());
        for (const auto& row : lp.rows) {
            coeffs.push_back(row.coeffs);
            rhs.push_back(row.rhs);
        }
        auto out = detail::simplex_impl<Rational>(lp.objective, coeffs, senses, rhs);
        solution.status = out.status;
        solution.exact = true;
        if (out.status == LpStatus::Optimal) {
            solution.value = out.value;
            solution.x = out.x;
            solution.dual = out.dual;
            solution.value_real = to_double(out.value);
            solution.x_real.reserve(out.x.size());
            for (const auto& v : out.x) solution.x_real.push_back(to_double(v));
        }
    } else {
        std::vector<double> objective;
        objective.reserve(lp.objective.size());
        for (const auto& v : lp.objective) objective.push_back(to_double(v));
        std::vector<std::vector<double>> coeffs;
        std::vector<double> rhs;
        coeffs.reserve(lp.rows.size());
        for (const auto& row : lp.rows) {
            std::vector<double> r;
            r.reserve(row.coeffs.size());
            for (const auto& v : row.coeffs) r.push_back(to_double(v));
            coeffs.push_back(std::move(r));
            rhs.push_back(to_double(row.rhs));
        }
        auto out = detail::simplex_impl<double>(objective, coeffs, senses, rhs);
        solution.status = out.status;
        solution.exact = false;
        if (out.status == LpStatus::Optimal) {
            solution.value_real = out.value;
            solution.x_real = out.x;
        }
    }
    return solution;
}

} // namespace mdbell
