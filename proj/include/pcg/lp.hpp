#pragma once

#include "pcg/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcg::lp {

using VarId = std::size_t;

struct Term {
    VarId var;
    Rational coef;
};
using LinearForm = std::vector<Term>;

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };

struct Variable {
    std::string name;
    bool nonnegative = true;
};

struct Constraint {
    LinearForm form;
    Relation rel;
    Rational bound;
};

/// Exact rational linear program over named variables.
class LinearProgram {
public:
    VarId add_variable(std::string name, bool nonnegative = true);
    /// Throws std::invalid_argument if the form references an undeclared variable.
    void add_constraint(LinearForm form, Relation rel, Rational bound);
    void add_constraint(Constraint c) { add_constraint(std::move(c.form), c.rel, std::move(c.bound)); }
    void set_objective(Sense sense, LinearForm form);

    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    bool has_objective() const { return objective_.has_value(); }
    Sense sense() const { return sense_; }
    const LinearForm& objective() const;

private:
    void check_form(const LinearForm& form) const;

    std::vector<Variable> vars_;
    std::vector<Constraint> constraints_;
    Sense sense_ = Sense::Maximize;
    std::optional<LinearForm> objective_;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    /// Objective value when optimal (zero for pure feasibility programs).
    Rational value;
    /// One value per declared variable when optimal.
    std::vector<Rational> assignment;
};

/// Two-phase simplex with Bland's least-index rule on an integer
/// (fraction-free) tableau. Checked 64-bit arithmetic is tried first and the
/// solve is repeated with GMP integers if any entry would overflow. Every
/// optimal assignment is re-checked against the program before returning.
Solution solve(const LinearProgram& lp);

Rational evaluate(const LinearForm& form, std::span<const Rational> x);
bool satisfies(const Constraint& c, std::span<const Rational> x);

struct StrictConstraint {
    LinearForm form;
    bool strict = false;
    Relation rel = Relation::LessEqual;
    Rational bound;
};

/// Finds a point meeting every constraint, strict ones strictly. A slack s is
/// subtracted from each strict constraint and maximized; a point is returned
/// iff the optimum is positive or unbounded. `normalization` pins the scale of
/// otherwise homogeneous systems. Strict equalities are rejected.
std::optional<std::vector<Rational>> strict_feasibility(std::span<const Variable> variables,
                                                        std::span<const StrictConstraint> constraints,
                                                        const std::optional<Constraint>& normalization = {});

bool satisfies(const StrictConstraint& c, std::span<const Rational> x);

/// Counters for diagnostics; process-wide and monotone.
struct SolverStats {
    std::size_t solves = 0;
    std::size_t overflow_retries = 0;
};
SolverStats solver_stats();

}  // namespace pcg::lp
