#include "arbhh/sparse_matrix.hpp"

#include <limits>

namespace arbhh::linalg {

std::vector<IntEntry> normalize_entries(std::vector<IntEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const IntEntry& a, const IntEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<IntEntry> out;
    for (const IntEntry& e : entries) {
        if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
            out.back().val += e.val;
        else
            out.push_back(e);
    }
    std::erase_if(out, [](const IntEntry& e) { return e.val == 0; });
    return out;
}

namespace {

template <class F>
struct Eliminator {
    using Elem = typename F::Elem;
    const F& f;
    std::vector<std::map<int, Elem>> rows;
    std::vector<int> col_count;
    std::vector<bool> row_done;

    Eliminator(const F& f_, const SparseMatrix<F>& m)
        : f(f_), rows(m.rows()), col_count(m.cols(), 0), row_done(m.rows(), false) {
        for (const auto& e : m.entries()) {
            rows[e.row][e.col] = e.val;
            ++col_count[e.col];
        }
    }

    // Markowitz-style pivot: minimize (nnz(row)-1)*(nnz(col)-1),
    // tie-break by (col, row) for determinism.
    bool pick_pivot(int& pr, int& pc) {
        long long best = std::numeric_limits<long long>::max();
        pr = -1;
        pc = -1;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (row_done[r] || rows[r].empty()) continue;
            long long rn = static_cast<long long>(rows[r].size()) - 1;
            for (const auto& [c, v] : rows[r]) {
                long long score = rn * (col_count[c] - 1);
                if (score < best || (score == best && (c < pc || (c == pc && r < pr)))) {
                    best = score;
                    pr = r;
                    pc = c;
                }
            }
        }
        return pr >= 0;
    }

    void eliminate(int pr, int pc) {
        Elem pivot_inv = f.inv(rows[pr].at(pc));
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pr || row_done[r]) continue;
            auto it = rows[r].find(pc);
            if (it == rows[r].end()) continue;
            Elem factor = f.mul(it->second, pivot_inv);
            for (const auto& [c, v] : rows[pr]) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    Elem nv = f.neg(f.mul(factor, v));
                    if (!f.is_zero(nv)) {
                        rows[r][c] = nv;
                        ++col_count[c];
                    }
                } else {
                    jt->second = f.sub(jt->second, f.mul(factor, v));
                    if (f.is_zero(jt->second)) {
                        rows[r].erase(jt);
                        --col_count[c];
                    }
                }
            }
        }
        for (const auto& [c, v] : rows[pr]) --col_count[c];
        row_done[pr] = true;
        rows[pr].clear();
    }
};

} // namespace

template <class F>
int rank(const F& f, const SparseMatrix<F>& m) {
    Eliminator<F> e(f, m);
    int rk = 0;
    int pr, pc;
    while (e.pick_pivot(pr, pc)) {
        e.eliminate(pr, pc);
        ++rk;
    }
    return rk;
}

template <class F>
std::vector<std::vector<std::pair<int, typename F::Elem>>> kernel_basis(const F& f, const SparseMatrix<F>& m) {
    using Elem = typename F::Elem;
    // Reduced row echelon with fixed left-to-right column order; determinism
    // matters more than fill here (kernels are only taken of small matrices).
    std::vector<std::map<int, Elem>> rows(m.rows());
    for (const auto& e : m.entries()) rows[e.row][e.col] = e.val;

    std::vector<int> pivot_row_of_col(m.cols(), -1);
    std::vector<bool> used(m.rows(), false);
    for (int c = 0; c < m.cols(); ++c) {
        int pr = -1;
        for (int r = 0; r < m.rows(); ++r) {
            if (used[r]) continue;
            if (rows[r].count(c)) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        Elem inv = f.inv(rows[pr].at(c));
        std::map<int, Elem> scaled;
        for (const auto& [cc, v] : rows[pr]) scaled[cc] = f.mul(inv, v);
        rows[pr] = std::move(scaled);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pr) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            Elem factor = it->second;
            for (const auto& [cc, v] : rows[pr]) {
                auto jt = rows[r].find(cc);
                if (jt == rows[r].end()) {
                    Elem nv = f.neg(f.mul(factor, v));
                    if (!f.is_zero(nv)) rows[r][cc] = nv;
                } else {
                    jt->second = f.sub(jt->second, f.mul(factor, v));
                    if (f.is_zero(jt->second)) rows[r].erase(jt);
                }
            }
        }
        used[pr] = true;
        pivot_row_of_col[c] = pr;
    }

    std::vector<std::vector<std::pair<int, Elem>>> basis;
    for (int cf = 0; cf < m.cols(); ++cf) {
        if (pivot_row_of_col[cf] >= 0) continue;
        std::vector<std::pair<int, Elem>> vec;
        vec.push_back({cf, f.one()});
        for (int c = 0; c < m.cols(); ++c) {
            int r = pivot_row_of_col[c];
            if (r < 0) continue;
            auto it = rows[r].find(cf);
            if (it != rows[r].end()) vec.push_back({c, f.neg(it->second)});
        }
        std::sort(vec.begin(), vec.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(vec));
    }
    return basis;
}

template int rank<FieldQ>(const FieldQ&, const SparseMatrix<FieldQ>&);
template int rank<FieldFp>(const FieldFp&, const SparseMatrix<FieldFp>&);
template std::vector<std::vector<std::pair<int, FieldQ::Elem>>> kernel_basis<FieldQ>(const FieldQ&, const SparseMatrix<FieldQ>&);
template std::vector<std::vector<std::pair<int, FieldFp::Elem>>> kernel_basis<FieldFp>(const FieldFp&, const SparseMatrix<FieldFp>&);

} // namespace arbhh::linalg
