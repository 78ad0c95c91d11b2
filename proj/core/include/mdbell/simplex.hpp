#pragma once

#include "mdbell/rational.hpp"

#include <cstddef>
#include <type_traits>
#include <vector>

namespace mdbell {

enum class NumericMode { Exact, Real };

enum class LpSense { LessEq, Eq };

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

// Maximize objective . x subject to the rows, with every variable >= 0.
struct LinearProgram {
    struct Row {
        std::vector<Rational> coeffs;
        LpSense sense = LpSense::LessEq;
        Rational rhs;
    };
    std::vector<Rational> objective;
    std::vector<Row> rows;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    bool exact = false;
    Rational value;              // filled in exact mode
    std::vector<Rational> x;     // filled in exact mode
    std::vector<Rational> dual;  // exact mode; for a row stated with negative
                                 // rhs the multiplier refers to the negated row
    double value_real = 0;       // filled in both modes
    std::vector<double> x_real;  // filled in both modes
};

namespace detail {

template <class T> struct SimplexTol;
template <> struct SimplexTol<Rational> {
    static Rational value() { return 0; }
};
template <> struct SimplexTol<double> {
    static double value() { return 1e-9; }
};

template <class T>
struct SimplexOutcome {
    LpStatus status = LpStatus::Infeasible;
    T value{};
    std::vector<T> x;
    std::vector<T> dual;
};

// Dense two-phase simplex with Bland's anti-cycling rule.  Exact-rational
// instantiations re-verify the final basis against the input data through the
// dual solution (primal feasibility, dual feasibility and sign conditions,
// and strong duality) before returning.
template <class T>
SimplexOutcome<T> simplex_impl(const std::vector<T>& objective,
                               const std::vector<std::vector<T>>& row_coeffs,
                               const std::vector<LpSense>& senses,
                               const std::vector<T>& rhs) {
    const T tol = SimplexTol<T>::value();
    const int n = int(objective.size());
    const int m = int(row_coeffs.size());

    // Normalized copy with nonnegative right-hand sides.
    std::vector<std::vector<T>> a(row_coeffs);
    std::vector<T> b(rhs);
    std::vector<int> kind(m); // 0: <=, 1: >=, 2: ==
    for (int i = 0; i < m; ++i) {
        kind[i] = senses[i] == LpSense::Eq ? 2 : 0;
        if (b[i] < 0) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
            if (kind[i] == 0) kind[i] = 1;
        }
    }

    int slack_count = 0, artificial_count = 0;
    for (int i = 0; i < m; ++i) {
        if (kind[i] == 0) ++slack_count;
        else if (kind[i] == 1) { ++slack_count; ++artificial_count; }
        else ++artificial_count;
    }
    const int ncols = n + slack_count + artificial_count;
    const int art_begin = n + slack_count;

    std::vector<std::vector<T>> t(m, std::vector<T>(ncols, T(0)));
    std::vector<T> tb(b);
    std::vector<int> basis(m, -1);
    std::vector<int> unit_col(m, -1); // the column created as this row's unit
    {
        int sc = n, ac = art_begin;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
            if (kind[i] == 0) {
                t[i][sc] = T(1);
                basis[i] = sc;
                unit_col[i] = sc;
                ++sc;
            } else {
                if (kind[i] == 1) { t[i][sc] = T(-1); ++sc; }
                t[i][ac] = T(1);
                basis[i] = ac;
                unit_col[i] = ac;
                ++ac;
            }
        }
    }

    const long iteration_cap = 10L * (m + ncols) * (m + ncols);
    long iterations = 0;

    auto pivot = [&](int r, int c) {
        T p = t[r][c];
        for (int j = 0; j < ncols; ++j) t[r][j] /= p;
        tb[r] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            T f = t[i][c];
            if (f == 0) continue;
            for (int j = 0; j < ncols; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
            tb[i] -= f * tb[r];
        }
        basis[r] = c;
    };

    // Reduced costs and objective value for cost vector c at the current basis.
    auto price = [&](const std::vector<T>& cost, std::vector<T>& d, T& v) {
        d = cost;
        v = T(0);
        for (int i = 0; i < m; ++i) {
            const T& cb = cost[basis[i]];
            if (cb == 0) continue;
            v += cb * tb[i];
            for (int j = 0; j < ncols; ++j)
                if (t[i][j] != 0) d[j] -= cb * t[i][j];
        }
    };

    std::vector<char> banned(ncols, 0);

    auto iterate = [&](const std::vector<T>& cost) -> LpStatus {
        std::vector<T> d;
        T v;
        while (true) {
            if (++iterations > iteration_cap) return LpStatus::IterationLimit;
            price(cost, d, v);
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (!banned[j] && d[j] > tol) { enter = j; break; }
            if (enter < 0) return LpStatus::Optimal;
            int leave = -1;
            T best{};
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= tol) continue;
                T ratio = tb[i] / t[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    };

    SimplexOutcome<T> out;

    if (artificial_count > 0) {
        std::vector<T> phase1(ncols, T(0));
        for (int j = art_begin; j < ncols; ++j) phase1[j] = T(-1);
        LpStatus st = iterate(phase1);
        if (st == LpStatus::IterationLimit) { out.status = st; return out; }
        std::vector<T> d;
        T v;
        price(phase1, d, v);
        if (v < -tol) { out.status = LpStatus::Infeasible; return out; }
        for (int i = 0; i < m; ++i) {
            if (basis[i] < art_begin) continue;
            int c = -1;
            for (int j = 0; j < art_begin && c < 0; ++j)
                if (t[i][j] > tol || t[i][j] < -tol) c = j;
            if (c >= 0) pivot(i, c);
        }
        for (int j = art_begin; j < ncols; ++j) banned[j] = 1;
    }

    std::vector<T> cost(ncols, T(0));
    for (int j = 0; j < n; ++j) cost[j] = objective[j];
    LpStatus st = iterate(cost);
    if (st != LpStatus::Optimal) { out.status = st; return out; }

    std::vector<T> d;
    T v;
    price(cost, d, v);
    out.status = LpStatus::Optimal;
    out.value = v;
    out.x.assign(n, T(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = tb[i];
    out.dual.assign(m, T(0));
    for (int i = 0; i < m; ++i) out.dual[i] = -d[unit_col[i]];

    if constexpr (std::is_same_v<T, Rational>) {
        auto fail = [] { throw Error("exact simplex failed its optimality self-check"); };
        for (int j = 0; j < n; ++j)
            if (out.x[j] < 0) fail();
        Rational dual_value = 0;
        for (int i = 0; i < m; ++i) {
            Rational lhs = 0;
            for (int j = 0; j < n; ++j) lhs += a[i][j] * out.x[j];
            if (kind[i] == 0 && lhs > b[i]) fail();
            if (kind[i] == 1 && lhs < b[i]) fail();
            if (kind[i] == 2 && lhs != b[i]) fail();
            if (kind[i] == 0 && out.dual[i] < 0) fail();
            if (kind[i] == 1 && out.dual[i] > 0) fail();
            dual_value += out.dual[i] * b[i];
        }
        for (int j = 0; j < n; ++j) {
            Rational ya = 0;
            for (int i = 0; i < m; ++i) ya += out.dual[i] * a[i][j];
            if (ya < objective[j]) fail();
        }
        if (dual_value != out.value) fail();
    }
    return out;
}

} // namespace detail

// Optimal basic solution, or the infeasible/unbounded/iteration-cap status.
// Exact mode pivots in rational arithmetic and certifies the optimum through
// LP duality; real mode uses doubles with 1e-9 tolerances.
LpSolution simplex_solve(const LinearProgram& lp, NumericMode mode = NumericMode::Exact);

} // namespace mdbell
