#ifndef ARBHH_SPARSE_MATRIX_HPP
#define ARBHH_SPARSE_MATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "arbhh/error.hpp"
#include "arbhh/field.hpp"

namespace arbhh::linalg {

/// Integer triplet; the combinatorial layer assembles matrices as signed
/// integer entries and realizes them over a field afterwards. All matrices in
/// this artifact arise from counting paths with signs, so entries stay tiny.
struct IntEntry {
    int row = 0;
    int col = 0;
    long long val = 0;
};

/// Sums duplicate (row, col) triplets and drops zero sums.
std::vector<IntEntry> normalize_entries(std::vector<IntEntry> entries);

/// A sparse matrix over the field F. Entries are kept sorted by (row, col)
/// with no duplicates and no zero values.
template <class F>
class SparseMatrix {
public:
    using Elem = typename F::Elem;
    struct Entry {
        int row;
        int col;
        Elem val;
    };

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix from_int_entries(const F& f, int rows, int cols, std::vector<IntEntry> raw) {
        raw = normalize_entries(std::move(raw));
        SparseMatrix m(rows, cols);
        for (const IntEntry& e : raw) {
            if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
                throw Error(ErrorCode::Internal, "matrix entry out of range");
            Elem v = f.from_int(e.val);
            if (!f.is_zero(v)) m.entries_.push_back(Entry{e.row, e.col, v});
        }
        return m;
    }

    static SparseMatrix identity(const F& f, int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.entries_.push_back(Entry{i, i, f.one()});
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        t.entries_.reserve(entries_.size());
        for (const Entry& e : entries_) t.entries_.push_back(Entry{e.col, e.row, e.val});
        std::sort(t.entries_.begin(), t.entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
        return t;
    }

    /// Exact matrix product, used for the d∘d = 0 gate.
    SparseMatrix multiply(const F& f, const SparseMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw Error(ErrorCode::Internal, "shape mismatch in multiply");
        std::map<std::pair<int, int>, Elem> acc;
        std::vector<std::vector<std::pair<int, Elem>>> rhs_rows(rhs.rows_);
        for (const Entry& e : rhs.entries_) rhs_rows[e.row].push_back({e.col, e.val});
        for (const Entry& e : entries_) {
            for (const auto& [c, v] : rhs_rows[e.col]) {
                auto key = std::make_pair(e.row, c);
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, f.mul(e.val, v));
                else
                    it->second = f.add(it->second, f.mul(e.val, v));
            }
        }
        SparseMatrix out(rows_, rhs.cols_);
        for (auto& [key, v] : acc)
            if (!f.is_zero(v)) out.entries_.push_back(Entry{key.first, key.second, v});
        return out;
    }

    bool is_zero_matrix() const { return entries_.empty(); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> entries_;
};

/// Exact rank by sparse Gaussian elimination with Markowitz-style pivoting
/// (pivot minimizing fill estimate, deterministic tie-break). Fraction-free
/// tricks are unnecessary at this artifact's sizes; arithmetic stays exact.
template <class F>
int rank(const F& f, const SparseMatrix<F>& m);

/// Basis of the right kernel {x : m x = 0}, as sparse column vectors
/// (index, value), deterministic (reduced echelon, free columns ascending).
template <class F>
std::vector<std::vector<std::pair<int, typename F::Elem>>> kernel_basis(const F& f, const SparseMatrix<F>& m);

} // namespace arbhh::linalg

#endif
