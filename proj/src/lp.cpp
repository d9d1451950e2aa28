#include "pcg/lp.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>

namespace pcg::lp {

VarId LinearProgram::add_variable(std::string name, bool nonnegative) {
    vars_.push_back({std::move(name), nonnegative});
    return vars_.size() - 1;
}

void LinearProgram::check_form(const LinearForm& form) const {
    for (const auto& t : form) {
        if (t.var >= vars_.size()) {
            throw std::invalid_argument("linear form references undeclared variable " + std::to_string(t.var));
        }
    }
}

void LinearProgram::add_constraint(LinearForm form, Relation rel, Rational bound) {
    check_form(form);
    constraints_.push_back({std::move(form), rel, std::move(bound)});
}

void LinearProgram::set_objective(Sense sense, LinearForm form) {
    check_form(form);
    sense_ = sense;
    objective_ = std::move(form);
}

const LinearForm& LinearProgram::objective() const {
    static const LinearForm empty;
    return objective_ ? *objective_ : empty;
}

Rational evaluate(const LinearForm& form, std::span<const Rational> x) {
    Rational sum = 0;
    for (const auto& t : form) {
        sum += t.coef * x[t.var];
    }
    return sum;
}

bool satisfies(const Constraint& c, std::span<const Rational> x) {
    const Rational lhs = evaluate(c.form, x);
    switch (c.rel) {
        case Relation::LessEqual:
            return lhs <= c.bound;
        case Relation::Equal:
            return lhs == c.bound;
        case Relation::GreaterEqual:
            return lhs >= c.bound;
    }
    return false;
}

bool satisfies(const StrictConstraint& c, std::span<const Rational> x) {
    if (!c.strict) {
        return satisfies(Constraint{c.form, c.rel, c.bound}, x);
    }
    const Rational lhs = evaluate(c.form, x);
    switch (c.rel) {
        case Relation::LessEqual:
            return lhs < c.bound;
        case Relation::GreaterEqual:
            return lhs > c.bound;
        case Relation::Equal:
            return false;
    }
    return false;
}

namespace {

std::atomic<std::size_t> g_solves{0};
std::atomic<std::size_t> g_overflow_retries{0};

struct Overflow {};

// Integer arithmetic used by the tableau. The int64 flavour throws Overflow
// whenever a result leaves the 64-bit range.
using i128 = __int128;

inline std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v <= std::numeric_limits<std::int64_t>::min()) {
        throw Overflow{};
    }
    return static_cast<std::int64_t>(v);
}

inline std::int64_t bareiss(std::int64_t a, std::int64_t p, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t x, y, z;
    if (!__builtin_mul_overflow(a, p, &x) && !__builtin_mul_overflow(b, c, &y) && !__builtin_sub_overflow(x, y, &z)) {
        return d == 1 ? z : z / d;
    }
    return narrow((static_cast<i128>(a) * p - static_cast<i128>(b) * c) / d);
}
inline mpz_class bareiss(const mpz_class& a, const mpz_class& p, const mpz_class& b, const mpz_class& c,
                         const mpz_class& d) {
    mpz_class r = a * p - b * c;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }
inline int sign_of(const mpz_class& v) { return sgn(v); }

// Compares n1/d1 with n2/d2 for positive denominators: <0, 0, >0.
inline int compare_ratio(std::int64_t n1, std::int64_t d1, std::int64_t n2, std::int64_t d2) {
    const i128 l = static_cast<i128>(n1) * d2;
    const i128 r = static_cast<i128>(n2) * d1;
    return (l > r) - (l < r);
}
inline int compare_ratio(const mpz_class& n1, const mpz_class& d1, const mpz_class& n2, const mpz_class& d2) {
    return cmp(n1 * d2, n2 * d1);
}

template <class Int>
Int from_mpz(const mpz_class& v);
template <>
std::int64_t from_mpz<std::int64_t>(const mpz_class& v) {
    if (!v.fits_slong_p()) {
        throw Overflow{};
    }
    return v.get_si();
}
template <>
mpz_class from_mpz<mpz_class>(const mpz_class& v) {
    return v;
}

inline mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
inline const mpz_class& to_mpz(const mpz_class& v) { return v; }

// Standard form shared by both integer flavours: maximize c.x subject to
// A x <= b, x >= 0, with integer data. Stored as int64 unless some entry
// does not fit, in which case everything is kept as GMP integers.
struct StandardForm {
    std::size_t cols = 0;
    std::size_t rows = 0;
    bool big = false;
    std::vector<std::int64_t> a, b, c;
    std::vector<mpz_class> big_a, big_b, big_c;

    mpz_class a_at(std::size_t i, std::size_t j) const {
        return big ? big_a[i * cols + j] : to_mpz(a[i * cols + j]);
    }
    mpz_class b_at(std::size_t i) const { return big ? big_b[i] : to_mpz(b[i]); }
    mpz_class c_at(std::size_t j) const { return big ? big_c[j] : to_mpz(c[j]); }

    void promote() {
        if (big) {
            return;
        }
        big = true;
        for (auto v : a) big_a.push_back(to_mpz(v));
        for (auto v : b) big_b.push_back(to_mpz(v));
        for (auto v : c) big_c.push_back(to_mpz(v));
        a.clear();
        b.clear();
        c.clear();
    }

    void push_row(const std::vector<mpz_class>& row, const mpz_class& rhs) {
        bool fits = !big && rhs.fits_slong_p();
        for (std::size_t j = 0; j < cols && fits; ++j) {
            fits = row[j].fits_slong_p();
        }
        if (!fits) {
            promote();
        }
        if (big) {
            big_a.insert(big_a.end(), row.begin(), row.end());
            big_b.push_back(rhs);
        } else {
            for (const auto& v : row) {
                a.push_back(v.get_si());
            }
            b.push_back(rhs.get_si());
        }
        ++rows;
    }
};

enum class Outcome { Optimal, Infeasible, Unbounded };

struct RawResult {
    Outcome outcome = Outcome::Infeasible;
    std::vector<Rational> x;
    Rational value;
};

template <class Int>
Int entry(const StandardForm& sf, std::size_t i, std::size_t j);
template <>
std::int64_t entry<std::int64_t>(const StandardForm& sf, std::size_t i, std::size_t j) {
    if (sf.big) {
        throw Overflow{};
    }
    // Row 0 is the objective, column 0 the right-hand side.
    if (i == 0) {
        return 0;
    }
    return j == 0 ? sf.b[i - 1] : sf.a[(i - 1) * sf.cols + (j - 1)];
}
template <>
mpz_class entry<mpz_class>(const StandardForm& sf, std::size_t i, std::size_t j) {
    if (i == 0) {
        return 0;
    }
    return j == 0 ? sf.b_at(i - 1) : sf.a_at(i - 1, j - 1);
}

// Dictionary tableau with a common positive denominator `d_`:
//   x_B(i) = (T[i][0] - sum_k T[i][k] x_N(k)) / d_   for rows i >= 1
//   z      = (T[0][0] - sum_k T[0][k] x_N(k)) / d_
// Pivots use Bareiss updates, so every entry stays an integer minor and the
// division by the previous denominator is exact.
template <class Int>
class Tableau {
public:
    explicit Tableau(const StandardForm& sf) : n_(sf.cols), m_(sf.rows) {
        rows_ = m_ + 1;
        cols_ = n_ + 1;
        t_.resize(rows_ * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                at(i, j) = entry<Int>(sf, i, j);
            }
        }
        d_ = Int(1);
        nonbasic_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            nonbasic_[j] = j;
        }
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
        }
        cost_.assign(n_ + m_ + 1, mpz_class(0));
        for (std::size_t j = 0; j < n_; ++j) {
            cost_[j] = sf.c_at(j);
        }
    }

    RawResult run() {
        if (!phase_one()) {
            return {Outcome::Infeasible, {}, {}};
        }
        load_objective();
        if (!optimize()) {
            return {Outcome::Unbounded, {}, {}};
        }
        RawResult r;
        r.outcome = Outcome::Optimal;
        r.x.assign(n_, Rational(0));
        const mpz_class d = to_mpz(d_);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i] < n_) {
                r.x[basis_[i]] = Rational(to_mpz(at(i + 1, 0)), d);
                r.x[basis_[i]].canonicalize();
            }
        }
        r.value = Rational(to_mpz(at(0, 0)), d);
        r.value.canonicalize();
        return r;
    }

private:
    Int& at(std::size_t i, std::size_t j) { return t_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return t_[i * cols_ + j]; }

    void pivot(std::size_t r, std::size_t s) {
        const Int p = at(r, s);
        const Int* prow = &t_[r * cols_];
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) {
                continue;
            }
            Int* row = &t_[i * cols_];
            const Int f = row[s];
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j != s) {
                    row[j] = bareiss(row[j], p, f, prow[j], d_);
                }
            }
            row[s] = -f;
        }
        at(r, s) = d_;
        d_ = p;
        std::swap(basis_[r - 1], nonbasic_[s - 1]);
        if (sign_of(d_) < 0) {
            for (auto& v : t_) {
                v = -v;
            }
            d_ = -d_;
        }
    }

    // Bland's rule: least variable index among improving columns, and least
    // basic variable index among tied ratio rows.
    bool optimize() {
        for (;;) {
            std::size_t s = 0;
            for (std::size_t j = 1; j < cols_; ++j) {
                if (sign_of(at(0, j)) < 0 && (s == 0 || nonbasic_[j - 1] < nonbasic_[s - 1])) {
                    s = j;
                }
            }
            if (s == 0) {
                return true;
            }
            std::size_t r = 0;
            for (std::size_t i = 1; i < rows_; ++i) {
                if (sign_of(at(i, s)) <= 0) {
                    continue;
                }
                if (r == 0) {
                    r = i;
                    continue;
                }
                const int c = compare_ratio(at(i, 0), at(i, s), at(r, 0), at(r, s));
                if (c < 0 || (c == 0 && basis_[i - 1] < basis_[r - 1])) {
                    r = i;
                }
            }
            if (r == 0) {
                return false;
            }
            pivot(r, s);
        }
    }

    bool phase_one() {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < rows_; ++i) {
            if (sign_of(at(i, 0)) < 0 && (worst == 0 || compare_ratio(at(i, 0), Int(1), at(worst, 0), Int(1)) < 0)) {
                worst = i;
            }
        }
        if (worst == 0) {
            return true;
        }
        // Auxiliary x0 added to every row: A x - x0 <= b; maximize -x0.
        const std::size_t aux = n_ + m_;
        add_aux_column(aux);
        at(0, cols_ - 1) = Int(1);
        pivot(worst, cols_ - 1);
        optimize();
        if (sign_of(at(0, 0)) < 0) {
            return false;
        }
        auto it = std::find(basis_.begin(), basis_.end(), aux);
        if (it != basis_.end()) {
            const std::size_t r = static_cast<std::size_t>(it - basis_.begin()) + 1;
            std::size_t s = 0;
            for (std::size_t j = 1; j < cols_ && s == 0; ++j) {
                if (sign_of(at(r, j)) != 0) {
                    s = j;
                }
            }
            if (s == 0) {
                remove_row(r);
            } else {
                pivot(r, s);
            }
        }
        const auto col = std::find(nonbasic_.begin(), nonbasic_.end(), aux);
        remove_column(static_cast<std::size_t>(col - nonbasic_.begin()) + 1);
        return true;
    }

    void load_objective() {
        const mpz_class d = to_mpz(d_);
        for (std::size_t j = 0; j < cols_; ++j) {
            mpz_class sum = 0;
            for (std::size_t i = 1; i < rows_; ++i) {
                const mpz_class& cb = cost_[basis_[i - 1]];
                if (sgn(cb) != 0) {
                    sum += cb * to_mpz(at(i, j));
                }
            }
            if (j > 0) {
                sum -= d * cost_[nonbasic_[j - 1]];
            }
            at(0, j) = from_mpz<Int>(sum);
        }
    }

    void add_aux_column(std::size_t var) {
        std::vector<Int> next(rows_ * (cols_ + 1), Int(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                next[i * (cols_ + 1) + j] = i == 0 ? Int(0) : at(i, j);
            }
            if (i > 0) {
                next[i * (cols_ + 1) + cols_] = Int(-1);
            }
        }
        t_ = std::move(next);
        ++cols_;
        nonbasic_.push_back(var);
    }

    void remove_column(std::size_t s) {
        std::vector<Int> next(rows_ * (cols_ - 1));
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j != s) {
                    next[i * (cols_ - 1) + k++] = at(i, j);
                }
            }
        }
        t_ = std::move(next);
        --cols_;
        nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(s - 1));
    }

    void remove_row(std::size_t r) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
        --rows_;
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r - 1));
    }

    std::size_t n_, m_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> t_;
    Int d_;
    std::vector<std::size_t> basis_, nonbasic_;
    std::vector<mpz_class> cost_;
};

// A constraint as seen by the standard-form builder: a borrowed form plus an
// optional multiple of one extra variable (the strictness slack).
struct RowRef {
    const LinearForm* form;
    VarId extra_var;
    long extra_coef;
    Relation rel;
    const Rational* bound;
};

constexpr std::size_t kNoColumn = std::numeric_limits<std::size_t>::max();

struct Prepared {
    bool infeasible = false;
    StandardForm sf;
    std::vector<std::size_t> pos_col;
    std::vector<std::size_t> neg_col;
    std::vector<std::optional<Rational>> fixed;
    mpz_class objective_scale = 1;
    Rational objective_offset = 0;
    bool minimize = false;
};

bool small_integer(const Rational& r) { return r.get_den() == 1 && r.get_num().fits_slong_p(); }

// Single-variable equality: returns the variable and its coefficient sum.
std::optional<std::pair<VarId, Rational>> singleton(const RowRef& row) {
    if (row.rel != Relation::Equal || row.extra_coef != 0 || row.form->empty()) {
        return std::nullopt;
    }
    const VarId v = row.form->front().var;
    Rational coef = 0;
    for (const auto& t : *row.form) {
        if (t.var != v) {
            return std::nullopt;
        }
        coef += t.coef;
    }
    if (sgn(coef) == 0) {
        return std::nullopt;
    }
    return std::pair{v, std::move(coef)};
}

class Builder {
public:
    Builder(std::span<const Variable> vars, std::size_t extra_vars) : nv_(vars.size() + extra_vars) {
        nonneg_.reserve(nv_);
        for (const auto& v : vars) {
            nonneg_.push_back(v.nonnegative);
        }
        nonneg_.resize(nv_, true);
    }

    Prepared build(const std::vector<RowRef>& rows, const LinearForm& objective, bool minimize) {
        Prepared& p = p_;
        p.fixed.assign(nv_, std::nullopt);
        std::vector<char> fixing(rows.size(), 0);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            auto one = singleton(rows[k]);
            if (!one) {
                continue;
            }
            Rational value = *rows[k].bound / one->second;
            const VarId var = one->first;
            if ((p.fixed[var] && *p.fixed[var] != value) || (nonneg_[var] && sgn(value) < 0)) {
                p.infeasible = true;
                return std::move(p);
            }
            p.fixed[var] = std::move(value);
            fixing[k] = 1;
        }
        std::size_t cols = 0;
        p.pos_col.assign(nv_, kNoColumn);
        p.neg_col.assign(nv_, kNoColumn);
        for (std::size_t v = 0; v < nv_; ++v) {
            if (p.fixed[v]) {
                continue;
            }
            p.pos_col[v] = cols++;
            if (!nonneg_[v]) {
                p.neg_col[v] = cols++;
            }
        }
        p.sf.cols = cols;
        fast_row_.resize(cols);

        for (std::size_t k = 0; k < rows.size() && !p.infeasible; ++k) {
            if (fixing[k]) {
                continue;
            }
            if (rows[k].rel != Relation::GreaterEqual) {
                add_row(rows[k], false);
            }
            if (rows[k].rel != Relation::LessEqual && !p.infeasible) {
                add_row(rows[k], true);
            }
        }
        if (p.infeasible) {
            return std::move(p);
        }

        p.minimize = minimize;
        std::vector<Rational> obj(cols, Rational(0));
        for (const auto& t : objective) {
            const Rational c = minimize ? Rational(-t.coef) : t.coef;
            if (p.fixed[t.var]) {
                p.objective_offset += c * *p.fixed[t.var];
                continue;
            }
            obj[p.pos_col[t.var]] += c;
            if (p.neg_col[t.var] != kNoColumn) {
                obj[p.neg_col[t.var]] -= c;
            }
        }
        mpz_class scale = 1;
        for (const auto& x : obj) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
        }
        p.objective_scale = scale;
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational s = obj[j] * scale;
            if (!p.sf.big && s.get_num().fits_slong_p()) {
                p.sf.c.push_back(s.get_num().get_si());
            } else {
                p.sf.promote();
                p.sf.big_c.push_back(s.get_num());
            }
        }
        return std::move(p);
    }

private:
    void add_row(const RowRef& row, bool negate) {
        if (!p_.sf.big && fast_row(row, negate)) {
            return;
        }
        slow_row(row, negate);
    }

    // All-integer rows with small entries go straight to int64.
    bool fast_row(const RowRef& row, bool negate) {
        std::fill(fast_row_.begin(), fast_row_.end(), 0);
        if (!small_integer(*row.bound)) {
            return false;
        }
        long rhs = row.bound->get_num().get_si();
        auto accumulate = [&](VarId var, long coef) {
            if (p_.fixed[var]) {
                if (!small_integer(*p_.fixed[var])) {
                    return false;
                }
                long prod;
                return !__builtin_mul_overflow(coef, p_.fixed[var]->get_num().get_si(), &prod) &&
                       !__builtin_sub_overflow(rhs, prod, &rhs);
            }
            long& slot = fast_row_[p_.pos_col[var]];
            if (__builtin_add_overflow(slot, coef, &slot)) {
                return false;
            }
            if (p_.neg_col[var] != kNoColumn) {
                long& neg = fast_row_[p_.neg_col[var]];
                if (__builtin_sub_overflow(neg, coef, &neg)) {
                    return false;
                }
            }
            return true;
        };
        for (const auto& t : *row.form) {
            if (!small_integer(t.coef) || !accumulate(t.var, t.coef.get_num().get_si())) {
                return false;
            }
        }
        if (row.extra_coef != 0 && !accumulate(row.extra_var, row.extra_coef)) {
            return false;
        }
        bool empty = true;
        for (auto& v : fast_row_) {
            if (negate) {
                v = -v;
            }
            empty = empty && v == 0;
        }
        if (negate) {
            rhs = -rhs;
        }
        if (empty) {
            p_.infeasible = p_.infeasible || rhs < 0;
            return true;
        }
        p_.sf.a.insert(p_.sf.a.end(), fast_row_.begin(), fast_row_.end());
        p_.sf.b.push_back(rhs);
        ++p_.sf.rows;
        return true;
    }

    void slow_row(const RowRef& row, bool negate) {
        const std::size_t cols = p_.sf.cols;
        std::vector<Rational> dense(cols, Rational(0));
        Rational bound = *row.bound;
        auto accumulate = [&](VarId var, const Rational& coef) {
            if (p_.fixed[var]) {
                bound -= coef * *p_.fixed[var];
                return;
            }
            dense[p_.pos_col[var]] += coef;
            if (p_.neg_col[var] != kNoColumn) {
                dense[p_.neg_col[var]] -= coef;
            }
        };
        for (const auto& t : *row.form) {
            accumulate(t.var, t.coef);
        }
        if (row.extra_coef != 0) {
            accumulate(row.extra_var, Rational(row.extra_coef));
        }
        if (negate) {
            for (auto& x : dense) {
                x = -x;
            }
            bound = -bound;
        }
        mpz_class scale = 1;
        bool empty = true;
        for (const auto& x : dense) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
            empty = empty && sgn(x) == 0;
        }
        if (empty) {
            p_.infeasible = p_.infeasible || sgn(bound) < 0;
            return;
        }
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), bound.get_den_mpz_t());
        std::vector<mpz_class> irow(cols);
        mpz_class g = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational s = dense[j] * scale;
            irow[j] = s.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), irow[j].get_mpz_t());
        }
        const Rational sb = bound * scale;
        mpz_class rhs = sb.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rhs.get_mpz_t());
        if (g > 1) {
            for (auto& x : irow) {
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            }
            mpz_divexact(rhs.get_mpz_t(), rhs.get_mpz_t(), g.get_mpz_t());
        }
        p_.sf.push_row(irow, rhs);
    }

    std::size_t nv_;
    std::vector<char> nonneg_;
    Prepared p_;
    std::vector<long> fast_row_;
};

RawResult run_tableau(const StandardForm& sf) {
    g_solves.fetch_add(1, std::memory_order_relaxed);
    if (!sf.big) {
        try {
            return Tableau<std::int64_t>(sf).run();
        } catch (const Overflow&) {
            g_overflow_retries.fetch_add(1, std::memory_order_relaxed);
        }
    }
    return Tableau<mpz_class>(sf).run();
}

// Maps a raw tableau result back onto the declared variables.
Solution finish(const Prepared& p, const RawResult& raw, std::size_t nv) {
    Solution sol;
    switch (raw.outcome) {
        case Outcome::Infeasible:
            sol.status = Status::Infeasible;
            return sol;
        case Outcome::Unbounded:
            sol.status = Status::Unbounded;
            return sol;
        case Outcome::Optimal:
            break;
    }
    sol.status = Status::Optimal;
    sol.assignment.assign(nv, Rational(0));
    for (std::size_t v = 0; v < nv; ++v) {
        if (p.fixed[v]) {
            sol.assignment[v] = *p.fixed[v];
            continue;
        }
        sol.assignment[v] = raw.x[p.pos_col[v]];
        if (p.neg_col[v] != kNoColumn) {
            sol.assignment[v] -= raw.x[p.neg_col[v]];
        }
    }
    const Rational value = raw.value / Rational(p.objective_scale) + p.objective_offset;
    sol.value = p.minimize ? Rational(-value) : value;
    return sol;
}

Solution solve_rows(std::span<const Variable> vars, std::size_t extra_vars, const std::vector<RowRef>& rows,
                    const LinearForm& objective, bool minimize) {
    Prepared p = Builder(vars, extra_vars).build(rows, objective, minimize);
    if (p.infeasible) {
        return {};
    }
    return finish(p, run_tableau(p.sf), vars.size() + extra_vars);
}

}  // namespace

Solution solve(const LinearProgram& lp) {
    std::vector<RowRef> rows;
    rows.reserve(lp.constraints().size());
    for (const auto& c : lp.constraints()) {
        rows.push_back({&c.form, 0, 0, c.rel, &c.bound});
    }
    const bool minimize = lp.has_objective() && lp.sense() == Sense::Minimize;
    Solution sol = solve_rows(lp.variables(), 0, rows, lp.objective(), minimize);
    if (sol.status != Status::Optimal) {
        return sol;
    }
    for (std::size_t v = 0; v < lp.variables().size(); ++v) {
        if (lp.variables()[v].nonnegative && sgn(sol.assignment[v]) < 0) {
            throw std::logic_error("simplex returned a negative value for " + lp.variables()[v].name);
        }
    }
    for (const auto& c : lp.constraints()) {
        if (!satisfies(c, sol.assignment)) {
            throw std::logic_error("simplex returned a point violating a constraint");
        }
    }
    if (evaluate(lp.objective(), sol.assignment) != sol.value) {
        throw std::logic_error("simplex objective value does not match its assignment");
    }
    return sol;
}

std::optional<std::vector<Rational>> strict_feasibility(std::span<const Variable> variables,
                                                        std::span<const StrictConstraint> constraints,
                                                        const std::optional<Constraint>& normalization) {
    // The slack is one extra variable after the declared ones. Restricting it
    // to s >= 0 loses nothing since only s > 0 is accepted.
    const VarId slack = variables.size();
    std::vector<RowRef> rows;
    rows.reserve(constraints.size() + 2);
    for (const auto& c : constraints) {
        long coef = 0;
        if (c.strict) {
            switch (c.rel) {
                case Relation::LessEqual:
                    coef = 1;
                    break;
                case Relation::GreaterEqual:
                    coef = -1;
                    break;
                case Relation::Equal:
                    throw std::invalid_argument("a strict constraint cannot be an equality");
            }
        }
        for (const auto& t : c.form) {
            if (t.var >= variables.size()) {
                throw std::invalid_argument("constraint references undeclared variable " + std::to_string(t.var));
            }
        }
        rows.push_back({&c.form, slack, coef, c.rel, &c.bound});
    }
    if (normalization) {
        rows.push_back({&normalization->form, slack, 0, normalization->rel, &normalization->bound});
    }
    const LinearForm objective{{slack, Rational(1)}};
    Solution sol = solve_rows(variables, 1, rows, objective, false);
    if (sol.status == Status::Unbounded) {
        const LinearForm pin{{slack, Rational(1)}};
        const Rational one(1);
        rows.push_back({&pin, slack, 0, Relation::Equal, &one});
        sol = solve_rows(variables, 1, rows, {}, false);
        if (sol.status != Status::Optimal) {
            throw std::logic_error("slack-unbounded system became infeasible at s = 1");
        }
    } else if (sol.status != Status::Optimal || sgn(sol.value) <= 0) {
        return std::nullopt;
    }
    sol.assignment.pop_back();
    for (std::size_t v = 0; v < variables.size(); ++v) {
        if (variables[v].nonnegative && sgn(sol.assignment[v]) < 0) {
            throw std::logic_error("strict feasibility point has a negative value for " + variables[v].name);
        }
    }
    for (const auto& c : constraints) {
        if (!satisfies(c, sol.assignment)) {
            throw std::logic_error("strict feasibility point violates a constraint");
        }
    }
    if (normalization && !satisfies(*normalization, sol.assignment)) {
        throw std::logic_error("strict feasibility point violates the normalization");
    }
    return std::move(sol.assignment);
}

SolverStats solver_stats() { return {g_solves.load(), g_overflow_retries.load()}; }

}  // namespace pcg::lp
