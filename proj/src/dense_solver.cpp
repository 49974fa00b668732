#include "arbhh/dense_solver.hpp"

namespace arbhh::linalg {

template <class F>
std::vector<int> rref(const F& f, Dense<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!f.is_zero(m.at(i, c))) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int c2 = 0; c2 < m.cols(); ++c2) std::swap(m.at(pr, c2), m.at(r, c2));
        typename F::Elem inv = f.inv(m.at(r, c));
        for (int c2 = 0; c2 < m.cols(); ++c2) m.at(r, c2) = f.mul(inv, m.at(r, c2));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            typename F::Elem factor = m.at(i, c);
            for (int c2 = 0; c2 < m.cols(); ++c2)
                m.at(i, c2) = f.sub(m.at(i, c2), f.mul(factor, m.at(r, c2)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int dense_rank(const F& f, Dense<F> m) {
    return static_cast<int>(rref(f, m).size());
}

template <class F>
std::optional<Vec<F>> solve(const F& f, const Dense<F>& a, const Vec<F>& b) {
    Dense<F> aug(f, a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<int> pivots = rref(f, aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // inconsistent
    Vec<F> x(a.cols(), f.zero());
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

template <class F>
std::vector<int> column_space_pivots(const F& f, const Dense<F>& a) {
    Dense<F> m = a;
    return rref(f, m);
}

template <class F>
std::vector<Vec<F>> null_space(const F& f, const Dense<F>& a) {
    Dense<F> m = a;
    std::vector<int> pivots = rref(f, m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (int cf = 0; cf < a.cols(); ++cf) {
        if (is_pivot[cf]) continue;
        Vec<F> v(a.cols(), f.zero());
        v[cf] = f.one();
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
            v[pivots[i]] = f.neg(m.at(i, cf));
        basis.push_back(std::move(v));
    }
    return basis;
}

template std::vector<int> rref<FieldQ>(const FieldQ&, Dense<FieldQ>&);
template std::vector<int> rref<FieldFp>(const FieldFp&, Dense<FieldFp>&);
template int dense_rank<FieldQ>(const FieldQ&, Dense<FieldQ>);
template int dense_rank<FieldFp>(const FieldFp&, Dense<FieldFp>);
template std::optional<Vec<FieldQ>> solve<FieldQ>(const FieldQ&, const Dense<FieldQ>&, const Vec<FieldQ>&);
template std::optional<Vec<FieldFp>> solve<FieldFp>(const FieldFp&, const Dense<FieldFp>&, const Vec<FieldFp>&);
template std::vector<int> column_space_pivots<FieldQ>(const FieldQ&, const Dense<FieldQ>&);
template std::vector<int> column_space_pivots<FieldFp>(const FieldFp&, const Dense<FieldFp>&);
template std::vector<Vec<FieldQ>> null_space<FieldQ>(const FieldQ&, const Dense<FieldQ>&);
template std::vector<Vec<FieldFp>> null_space<FieldFp>(const FieldFp&, const Dense<FieldFp>&);

} // namespace arbhh::linalg
