#include <map>

#include "arbhh/chain_complex.hpp"
#include "arbhh/hochschild.hpp"

namespace arbhh::hochschild {

using quiver::MonomialAlgebra;
using quiver::Path;

namespace {

struct BarChain {
    int p0 = -1;          // index into basis, any path (lazy allowed)
    std::vector<int> ps;  // interior factors, non-lazy, cyclically composable
    bool operator<(const BarChain& o) const {
        if (ps.size() != o.ps.size()) return ps.size() < o.ps.size();
        if (p0 != o.p0) return p0 < o.p0;
        return ps < o.ps;
    }
    bool operator==(const BarChain& o) const { return p0 == o.p0 && ps == o.ps; }
};

struct BarSector {
    // chains[n] with index maps, one weight sector
    std::vector<std::vector<BarChain>> chains;
    std::vector<std::map<BarChain, int>> index;
};

} // namespace

/// Reduced bar complex relative to the vertex subalgebra: chains are
/// cyclically composable tuples (p0; p1..pn) of basis paths with the
/// interior factors of length >= 1. The differential multiplies adjacent
/// factors with the classical alternating signs; total weight is preserved,
/// so each weight sector is a finite complex and the reported ranks are
/// exact per sector.
HHTable hh_bar(const MonomialAlgebra& a, int max_degree, int max_weight,
               const linalg::FieldSpec& field) {
    if (!a.degree_zero())
        throw Error(ErrorCode::DegreesUnsupported,
                    "hh_bar handles algebras concentrated in homological degree 0");
    if (max_degree < 0 || max_weight < 0)
        throw Error(ErrorCode::InvariantViolation, "bounds must be >= 0");

    std::vector<Path> basis = a.enumerate_basis(max_weight);
    std::map<Path, int> path_index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) path_index[basis[i]] = i;

    std::vector<int> wt(basis.size()), src(basis.size()), tgt(basis.size());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        wt[i] = a.path_weight(basis[i]);
        src[i] = a.path_source(basis[i]);
        tgt[i] = a.path_target(basis[i]);
    }
    std::vector<std::vector<int>> nonlazy_by_src(a.quiver().vertices.size());
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        if (!basis[i].is_lazy()) nonlazy_by_src[src[i]].push_back(i);

    // enumerate chains per weight sector
    std::map<int, BarSector> sectors;
    int max_n = max_degree + 1;
    for (int w = 0; w <= max_weight; ++w) {
        BarSector sec;
        sec.chains.resize(std::min(w, max_n) + 1);
        std::vector<int> stack;
        for (int p0 = 0; p0 < static_cast<int>(basis.size()); ++p0) {
            if (wt[p0] > w) continue;
            // extend with interior factors, weight exactly w, cyclic closure
            auto rec = [&](auto&& self, int cur_tgt, int wleft) -> void {
                int n = static_cast<int>(stack.size());
                if (wleft == 0 && cur_tgt == src[p0] && n <= std::min(w, max_n)) {
                    sec.chains[n].push_back(BarChain{p0, stack});
                }
                if (n >= std::min(w, max_n) || wleft <= 0) return;
                for (int q : nonlazy_by_src[cur_tgt]) {
                    if (wt[q] > wleft) continue;
                    stack.push_back(q);
                    self(self, tgt[q], wleft - wt[q]);
                    stack.pop_back();
                }
            };
            rec(rec, tgt[p0], w - wt[p0]);
        }
        sec.index.resize(sec.chains.size());
        for (size_t n = 0; n < sec.chains.size(); ++n) {
            std::sort(sec.chains[n].begin(), sec.chains[n].end());
            for (int i = 0; i < static_cast<int>(sec.chains[n].size()); ++i)
                sec.index[n][sec.chains[n][i]] = i;
        }
        sectors[w] = std::move(sec);
    }

    HHTable out;
    out.field = field;
    out.truncation = "max_weight " + std::to_string(max_weight) + ", max_degree " + std::to_string(max_degree);

    for (auto& [w, sec] : sectors) {
        linalg::ChainComplexI cx;
        for (size_t n = 0; n < sec.chains.size(); ++n)
            cx.set_dim(static_cast<int>(n), static_cast<int>(sec.chains[n].size()));
        for (int n = 1; n < static_cast<int>(sec.chains.size()); ++n) {
            for (int col = 0; col < static_cast<int>(sec.chains[n].size()); ++col) {
                const BarChain& ch = sec.chains[n][col];
                auto emit = [&](const BarChain& target, long long sign) {
                    auto it = sec.index[n - 1].find(target);
                    if (it == sec.index[n - 1].end())
                        throw Error(ErrorCode::Internal, "bar face escaped its weight sector");
                    cx.add_entry(n, it->second, col, sign);
                };
                // face 0: multiply p0 into the first interior factor
                if (auto q = a.concat(basis[ch.p0], basis[ch.ps[0]])) {
                    BarChain t{path_index.at(*q), {ch.ps.begin() + 1, ch.ps.end()}};
                    emit(t, 1);
                }
                // interior faces
                for (int i = 1; i <= n - 1; ++i) {
                    if (auto q = a.concat(basis[ch.ps[i - 1]], basis[ch.ps[i]])) {
                        BarChain t{ch.p0, {}};
                        t.ps = ch.ps;
                        t.ps[i - 1] = path_index.at(*q);
                        t.ps.erase(t.ps.begin() + i);
                        emit(t, (i % 2 == 0) ? 1 : -1);
                    }
                }
                // wrap face: multiply the last factor into p0
                if (auto q = a.concat(basis[ch.ps[n - 1]], basis[ch.p0])) {
                    BarChain t{path_index.at(*q), {ch.ps.begin(), ch.ps.end() - 1}};
                    emit(t, (n % 2 == 0) ? 1 : -1);
                }
            }
        }
        auto ranks = linalg::homology_ranks(cx, field);
        for (const auto& [d, r] : ranks)
            if (d <= max_degree && r > 0) out.set(d, SectorId::weight_sector(w), r);
    }
    out.add_totals();
    return out;
}

} // namespace arbhh::hochschild
