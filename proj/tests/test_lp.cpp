#include "pcg/lp.hpp"

#include <doctest.h>

#include <random>

using namespace pcg;
using namespace pcg::lp;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Best objective over all vertices of {A x <= b} in two variables, found by
// intersecting every pair of constraint lines. Unbounded programs are not
// detected; callers only pass bounded ones.
std::optional<Rational> corner_optimum(const std::vector<std::array<Rational, 3>>& rows, const Rational& cx,
                                       const Rational& cy) {
    std::optional<Rational> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const auto& [a1, b1, c1] = rows[i];
            const auto& [a2, b2, c2] = rows[j];
            const Rational det = a1 * b2 - a2 * b1;
            if (det == 0) {
                continue;
            }
            const Rational x = (c1 * b2 - c2 * b1) / det;
            const Rational y = (a1 * c2 - a2 * c1) / det;
            bool ok = true;
            for (const auto& [a, b, c] : rows) {
                ok = ok && a * x + b * y <= c;
            }
            if (ok) {
                const Rational v = cx * x + cy * y;
                if (!best || v > *best) {
                    best = v;
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("solve small programs") {
    {
        LinearProgram lp;
        const VarId s = lp.add_variable("s");
        lp.add_constraint({{s, q(1)}}, Relation::LessEqual, q(1));
        lp.set_objective(Sense::Maximize, {{s, q(1)}});
        const Solution sol = solve(lp);
        REQUIRE(sol.status == Status::Optimal);
        CHECK(sol.value == 1);
        CHECK(sol.assignment[s] == 1);
    }
    {
        LinearProgram lp;
        const VarId x = lp.add_variable("x");
        lp.add_constraint({{x, q(1)}}, Relation::GreaterEqual, q(1));
        lp.add_constraint({{x, q(1)}}, Relation::LessEqual, q(0));
        CHECK(solve(lp).status == Status::Infeasible);
    }
    {
        LinearProgram lp;
        const VarId x = lp.add_variable("x");
        const VarId y = lp.add_variable("y");
        lp.add_constraint({{x, q(1)}}, Relation::LessEqual, q(2));
        lp.add_constraint({{y, q(1)}}, Relation::LessEqual, q(1, 3));
        lp.set_objective(Sense::Maximize, {{x, q(1)}, {y, q(1)}});
        const Solution sol = solve(lp);
        REQUIRE(sol.status == Status::Optimal);
        const auto oracle = corner_optimum({{q(1), q(0), q(2)}, {q(0), q(1), q(1, 3)}, {q(-1), q(0), q(0)}, {q(0), q(-1), q(0)}},
                                           q(1), q(1));
        REQUIRE(oracle);
        CHECK(*oracle == q(7, 3));
        CHECK(sol.value == *oracle);
        CHECK(sol.assignment[x] == 2);
        CHECK(sol.assignment[y] == q(1, 3));
    }
}

TEST_CASE("unbounded, minimize, equalities and free variables") {
    {
        LinearProgram lp;
        const VarId x = lp.add_variable("x");
        lp.add_constraint({{x, q(1)}}, Relation::GreaterEqual, q(1));
        lp.set_objective(Sense::Maximize, {{x, q(1)}});
        CHECK(solve(lp).status == Status::Unbounded);
    }
    {
        LinearProgram lp;
        const VarId x = lp.add_variable("x", false);
        const VarId y = lp.add_variable("y");
        lp.add_constraint({{x, q(1)}, {y, q(1)}}, Relation::Equal, q(-3));
        lp.add_constraint({{y, q(1)}}, Relation::LessEqual, q(5));
        lp.set_objective(Sense::Minimize, {{x, q(1)}});
        const Solution sol = solve(lp);
        REQUIRE(sol.status == Status::Optimal);
        CHECK(sol.value == -8);
        CHECK(sol.assignment[x] == -8);
        CHECK(sol.assignment[y] == 5);
    }
    {
        // Single-variable equality fixes the variable.
        LinearProgram lp;
        const VarId x = lp.add_variable("x");
        const VarId y = lp.add_variable("y");
        lp.add_constraint({{x, q(2)}}, Relation::Equal, q(3));
        lp.add_constraint({{x, q(1)}, {y, q(1)}}, Relation::LessEqual, q(4));
        lp.set_objective(Sense::Maximize, {{y, q(1)}});
        const Solution sol = solve(lp);
        REQUIRE(sol.status == Status::Optimal);
        CHECK(sol.assignment[x] == q(3, 2));
        CHECK(sol.value == q(5, 2));
    }
    {
        LinearProgram lp;
        const VarId x = lp.add_variable("x");
        lp.add_constraint({{x, q(1)}}, Relation::Equal, q(-1));
        CHECK(solve(lp).status == Status::Infeasible);
    }
    {
        // Feasibility only: zero objective.
        LinearProgram lp;
        const VarId x = lp.add_variable("x");
        lp.add_constraint({{x, q(1)}}, Relation::GreaterEqual, q(7, 2));
        const Solution sol = solve(lp);
        REQUIRE(sol.status == Status::Optimal);
        CHECK(sol.value == 0);
        CHECK(sol.assignment[x] >= q(7, 2));
    }
}

TEST_CASE("degenerate programs terminate") {
    // Beale's cycling example.
    LinearProgram lp;
    std::vector<VarId> x;
    for (int i = 0; i < 4; ++i) {
        x.push_back(lp.add_variable("x" + std::to_string(i)));
    }
    lp.add_constraint({{x[0], q(1, 4)}, {x[1], q(-8)}, {x[2], q(-1)}, {x[3], q(9)}}, Relation::LessEqual, q(0));
    lp.add_constraint({{x[0], q(1, 2)}, {x[1], q(-12)}, {x[2], q(-1, 2)}, {x[3], q(3)}}, Relation::LessEqual, q(0));
    lp.add_constraint({{x[2], q(1)}}, Relation::LessEqual, q(1));
    lp.set_objective(Sense::Maximize, {{x[0], q(3, 4)}, {x[1], q(-20)}, {x[2], q(1, 2)}, {x[3], q(-6)}});
    const Solution sol = solve(lp);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.value == q(5, 4));
}

TEST_CASE("large coefficients fall back to arbitrary precision") {
    LinearProgram lp;
    const VarId x = lp.add_variable("x");
    const VarId y = lp.add_variable("y");
    const Rational big(mpz_class("123456789012345678901234567890"));
    lp.add_constraint({{x, big}, {y, q(1)}}, Relation::LessEqual, big * 2);
    lp.add_constraint({{x, q(1)}, {y, big}}, Relation::LessEqual, big * 3);
    lp.set_objective(Sense::Maximize, {{x, q(1)}, {y, q(1)}});
    const Solution sol = solve(lp);
    REQUIRE(sol.status == Status::Optimal);
    const auto oracle = corner_optimum(
        {{big, q(1), big * 2}, {q(1), big, big * 3}, {q(-1), q(0), q(0)}, {q(0), q(-1), q(0)}}, q(1), q(1));
    CHECK(sol.value == *oracle);
}

TEST_CASE("random bounded programs match vertex enumeration") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coef(-6, 6), rhs(1, 20), den(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        LinearProgram lp;
        const VarId x = lp.add_variable("x");
        const VarId y = lp.add_variable("y");
        std::vector<std::array<Rational, 3>> rows{{q(-1), q(0), q(0)}, {q(0), q(-1), q(0)}, {q(1), q(1), q(30)}};
        lp.add_constraint({{x, q(1)}, {y, q(1)}}, Relation::LessEqual, q(30));
        for (int k = 0; k < 3; ++k) {
            const Rational a = q(coef(rng), den(rng)), b = q(coef(rng), den(rng)), c = q(rhs(rng), den(rng));
            rows.push_back({a, b, c});
            lp.add_constraint({{x, a}, {y, b}}, Relation::LessEqual, c);
        }
        const Rational cx = q(coef(rng)), cy = q(coef(rng));
        lp.set_objective(Sense::Maximize, {{x, cx}, {y, cy}});
        const Solution sol = solve(lp);
        // The origin is always feasible, so the program is feasible and bounded.
        REQUIRE(sol.status == Status::Optimal);
        CHECK(sol.value == *corner_optimum(rows, cx, cy));
        // Deterministic.
        const Solution again = solve(lp);
        CHECK(again.assignment == sol.assignment);
    }
}

TEST_CASE("malformed programs are rejected") {
    LinearProgram lp;
    lp.add_variable("x");
    CHECK_THROWS_AS(lp.add_constraint({{5, q(1)}}, Relation::LessEqual, q(1)), std::invalid_argument);
    CHECK_THROWS_AS(lp.set_objective(Sense::Maximize, {{2, q(1)}}), std::invalid_argument);
}

TEST_CASE("strict feasibility") {
    const std::vector<Variable> vars{{"x", true}};
    {
        const std::vector<StrictConstraint> cs{{{{0, q(1)}}, true, Relation::LessEqual, q(1)},
                                               {{{0, q(1)}}, false, Relation::GreaterEqual, q(0)}};
        const auto x = strict_feasibility(vars, cs);
        REQUIRE(x);
        CHECK((*x)[0] >= 0);
        CHECK((*x)[0] < 1);
        for (const auto& c : cs) {
            CHECK(satisfies(c, *x));
        }
    }
    {
        const std::vector<StrictConstraint> cs{{{{0, q(1)}}, true, Relation::LessEqual, q(0)},
                                               {{{0, q(1)}}, false, Relation::GreaterEqual, q(0)}};
        CHECK_FALSE(strict_feasibility(vars, cs));
    }
    {
        // Unbounded slack: x > 0 with x free to grow.
        const std::vector<StrictConstraint> cs{{{{0, q(1)}}, true, Relation::GreaterEqual, q(0)}};
        const auto x = strict_feasibility(vars, cs);
        REQUIRE(x);
        CHECK((*x)[0] > 0);
    }
    {
        // Homogeneous system needs the normalization: 0 < x < y with y = 1.
        const std::vector<Variable> two{{"x", true}, {"y", true}};
        const std::vector<StrictConstraint> cs{{{{0, q(1)}}, true, Relation::GreaterEqual, q(0)},
                                               {{{0, q(1)}, {1, q(-1)}}, true, Relation::LessEqual, q(0)}};
        const Constraint norm{{{1, q(1)}}, Relation::Equal, q(1)};
        const auto x = strict_feasibility(two, cs, norm);
        REQUIRE(x);
        CHECK((*x)[1] == 1);
        CHECK((*x)[0] > 0);
        CHECK((*x)[0] < 1);
    }
    {
        const std::vector<StrictConstraint> cs{{{{0, q(1)}}, true, Relation::Equal, q(0)}};
        CHECK_THROWS_AS(strict_feasibility(vars, cs), std::invalid_argument);
        const std::vector<StrictConstraint> bad{{{{3, q(1)}}, false, Relation::Equal, q(0)}};
        CHECK_THROWS_AS(strict_feasibility(vars, bad), std::invalid_argument);
    }
}

TEST_CASE("satisfies and evaluate") {
    const std::vector<Rational> x{q(1, 2), q(3)};
    CHECK(evaluate({{0, q(2)}, {1, q(-1)}}, x) == -2);
    CHECK(satisfies(Constraint{{{0, q(2)}}, Relation::Equal, q(1)}, x));
    CHECK_FALSE(satisfies(StrictConstraint{{{0, q(2)}}, true, Relation::LessEqual, q(1)}, x));
    CHECK(satisfies(StrictConstraint{{{0, q(2)}}, false, Relation::LessEqual, q(1)}, x));
    CHECK(satisfies(StrictConstraint{{{1, q(1)}}, true, Relation::GreaterEqual, q(2)}, x));
}

TEST_CASE("solver stats count solves") {
    const auto before = solver_stats().solves;
    LinearProgram lp;
    const VarId x = lp.add_variable("x");
    lp.add_constraint({{x, q(1)}}, Relation::LessEqual, q(1));
    solve(lp);
    CHECK(solver_stats().solves > before);
}
