#ifndef ARBHH_DENSE_SOLVER_HPP
#define ARBHH_DENSE_SOLVER_HPP

#include <optional>
#include <vector>

#include "arbhh/field.hpp"

namespace arbhh::linalg {

/// Small dense exact matrix; workhorse for the homotopy-retraction plumbing
/// where explicit bases and solves are needed rather than ranks of big sparse
/// complexes. Row-major.
template <class F>
class Dense {
public:
    using Elem = typename F::Elem;

    Dense() = default;
    Dense(const F& f, int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, f.zero()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Elem> a_;
};

template <class F>
using Vec = std::vector<typename F::Elem>;

/// Reduced row echelon form in place; returns pivot columns in order.
template <class F>
std::vector<int> rref(const F& f, Dense<F>& m);

template <class F>
int dense_rank(const F& f, Dense<F> m);

/// Solves A x = b; returns one solution (free vars zero) or nullopt.
template <class F>
std::optional<Vec<F>> solve(const F& f, const Dense<F>& a, const Vec<F>& b);

/// Columns of a spanning the column space (indices into a's columns).
template <class F>
std::vector<int> column_space_pivots(const F& f, const Dense<F>& a);

/// Null space basis, one vector per free column, deterministic.
template <class F>
std::vector<Vec<F>> null_space(const F& f, const Dense<F>& a);

} // namespace arbhh::linalg

#endif
