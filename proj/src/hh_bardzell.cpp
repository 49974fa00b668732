#include <map>

#include "arbhh/chain_complex.hpp"
#include "arbhh/hochschild.hpp"

namespace arbhh::hochschild {

using quiver::MonomialAlgebra;
using quiver::Path;

namespace {

/// One associated path with its greedy relation covering (start positions
/// and lengths). The covering is the left-greedy one: each relation starts
/// at the leftmost admissible position sharing a letter with its
/// predecessor and extending strictly to the right.
struct ApElem {
    std::vector<int> word;   // arrow indices
    std::vector<int> starts; // relation start positions
    std::vector<int> lens;   // relation lengths
};

bool occurs_at(const std::vector<int>& word, const std::vector<int>& rel, int pos) {
    if (pos < 0 || pos + static_cast<int>(rel.size()) > static_cast<int>(word.size())) return false;
    return std::equal(rel.begin(), rel.end(), word.begin() + pos);
}

bool any_relation_occurrence_in(const MonomialAlgebra& a, const std::vector<int>& word, int lo, int hi) {
    // any relation occurring with start position p, lo < p < hi
    for (const auto& r : a.relations())
        for (int p = lo + 1; p < hi; ++p)
            if (occurs_at(word, r, p)) return true;
    return false;
}

} // namespace

std::vector<std::vector<std::vector<int>>> bardzell_ap_sets(const MonomialAlgebra& a, int max_n,
                                                            int max_weight) {
    std::vector<std::vector<ApElem>> ap(std::max(2, max_n + 1));
    auto word_weight = [&](const std::vector<int>& w) {
        int s = 0;
        for (int x : w) s += a.quiver().arrows[x].weight;
        return s;
    };
    if (max_n >= 2)
        for (const auto& r : a.relations())
            if (word_weight(r) <= max_weight)
                ap[2].push_back(ApElem{r, {0}, {static_cast<int>(r.size())}});
    for (int n = 2; n + 1 <= max_n; ++n) {
        for (const ApElem& g : ap[n]) {
            int q = g.starts.back();
            int rlen = g.lens.back();
            int wlen = static_cast<int>(g.word.size());
            for (int q2 = q + 1; q2 < q + rlen; ++q2) {
                for (const auto& r2 : a.relations()) {
                    int r2len = static_cast<int>(r2.size());
                    if (q2 + r2len <= wlen) continue; // must extend strictly right
                    // overlap part inside the word must match a prefix of r2
                    bool ok = true;
                    for (int i = q2; i < wlen && ok; ++i) ok = (g.word[i] == r2[i - q2]);
                    if (!ok) continue;
                    ApElem g2;
                    g2.word = g.word;
                    g2.word.insert(g2.word.end(), r2.begin() + (wlen - q2), r2.end());
                    if (word_weight(g2.word) > max_weight) continue;
                    // greedy minimality: no relation occurrence strictly between q and q2
                    if (any_relation_occurrence_in(a, g2.word, q, q2)) continue;
                    g2.starts = g.starts;
                    g2.starts.push_back(q2);
                    g2.lens = g.lens;
                    g2.lens.push_back(r2len);
                    ap[n + 1].push_back(std::move(g2));
                }
            }
        }
    }
    std::vector<std::vector<std::vector<int>>> out(ap.size());
    for (size_t n = 2; n < ap.size(); ++n) {
        for (const ApElem& e : ap[n]) out[n].push_back(e.word);
        std::sort(out[n].begin(), out[n].end());
    }
    return out;
}

/// Hochschild homology from the Bardzell complex K_n = sum over associated
/// paths g of the span of basis paths parallel to g in the reverse
/// direction. Differential: degree 1 sends (a, p) to (e_src, a.p) -
/// (e_tgt, p.a); even degrees split g at every occurrence of an AP_{n-1}
/// subword with coefficient +1; odd degrees >= 3 take the unique AP_{n-1}
/// prefix minus the unique AP_{n-1} suffix.
HHTable hh_bardzell(const MonomialAlgebra& a, int max_degree, int max_weight,
                    const linalg::FieldSpec& field) {
    if (!a.degree_zero())
        throw Error(ErrorCode::DegreesUnsupported,
                    "hh_bardzell handles algebras concentrated in homological degree 0");
    if (max_degree < 0 || max_weight < 0)
        throw Error(ErrorCode::InvariantViolation, "bounds must be >= 0");

    int max_n = max_degree + 1;
    auto ap = bardzell_ap_sets(a, max_n, max_weight);

    std::vector<Path> basis = a.enumerate_basis(max_weight);
    std::map<Path, int> path_index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) path_index[basis[i]] = i;

    const auto& qv = a.quiver();
    int nv = static_cast<int>(qv.vertices.size());
    int na = static_cast<int>(qv.arrows.size());

    // gamma lists per level: level 0 = vertices, 1 = arrows, n >= 2 = AP_n
    auto gamma_count = [&](int n) -> int {
        if (n == 0) return nv;
        if (n == 1) return na;
        return n < static_cast<int>(ap.size()) ? static_cast<int>(ap[n].size()) : 0;
    };
    auto gamma_word = [&](int n, int i) -> std::vector<int> {
        if (n == 0) return {};
        if (n == 1) return {i};
        return ap[n][i];
    };
    auto gamma_src = [&](int n, int i) -> int {
        if (n == 0) return i;
        if (n == 1) return qv.arrow_src(i);
        return qv.arrow_src(ap[n][i][0]);
    };
    auto gamma_tgt = [&](int n, int i) -> int {
        if (n == 0) return i;
        if (n == 1) return qv.arrow_tgt(i);
        return qv.arrow_tgt(ap[n][i].back());
    };
    auto word_weight = [&](const std::vector<int>& w) {
        int s = 0;
        for (int x : w) s += qv.arrows[x].weight;
        return s;
    };
    auto find_gamma = [&](int n, const std::vector<int>& word) -> int {
        for (int i = 0; i < gamma_count(n); ++i)
            if (gamma_word(n, i) == word) return i;
        return -1;
    };

    // K_n basis per weight sector: (gamma, p) with p: tgt(gamma) -> src(gamma)
    struct Cell {
        int gamma;
        int p;
        bool operator<(const Cell& o) const { return gamma != o.gamma ? gamma < o.gamma : p < o.p; }
    };
    std::map<int, std::vector<std::vector<Cell>>> sector_cells; // weight -> per-n cells
    std::map<int, std::vector<std::map<Cell, int>>> sector_index;
    for (int w = 0; w <= max_weight; ++w) {
        auto& cells = sector_cells[w];
        auto& index = sector_index[w];
        cells.resize(max_n + 1);
        index.resize(max_n + 1);
        for (int n = 0; n <= max_n; ++n) {
            for (int g = 0; g < gamma_count(n); ++g) {
                int gw = word_weight(gamma_word(n, g));
                if (gw > w) continue;
                for (int p = 0; p < static_cast<int>(basis.size()); ++p) {
                    if (a.path_weight(basis[p]) != w - gw) continue;
                    if (a.path_source(basis[p]) != gamma_tgt(n, g)) continue;
                    if (a.path_target(basis[p]) != gamma_src(n, g)) continue;
                    cells[n].push_back(Cell{g, p});
                }
            }
            for (int i = 0; i < static_cast<int>(cells[n].size()); ++i) index[n][cells[n][i]] = i;
        }
    }

    HHTable out;
    out.field = field;
    out.truncation = "max_weight " + std::to_string(max_weight) + ", max_degree " + std::to_string(max_degree);

    for (int w = 0; w <= max_weight; ++w) {
        const auto& cells = sector_cells[w];
        const auto& index = sector_index[w];
        linalg::ChainComplexI cx;
        for (int n = 0; n <= max_n; ++n) cx.set_dim(n, static_cast<int>(cells[n].size()));

        for (int n = 1; n <= max_n; ++n) {
            for (int col = 0; col < static_cast<int>(cells[n].size()); ++col) {
                const Cell& cell = cells[n][col];
                const Path& p = basis[cell.p];
                std::vector<int> word = gamma_word(n, cell.gamma);
                auto emit = [&](int gamma2, const std::optional<Path>& q, long long sign) {
                    if (!q) return;
                    Cell t{gamma2, path_index.at(*q)};
                    auto it = index[n - 1].find(t);
                    if (it == index[n - 1].end())
                        throw Error(ErrorCode::Internal, "bardzell face escaped its sector");
                    cx.add_entry(n, it->second, col, sign);
                };
                auto subpath = [&](int from, int to) -> Path {
                    Path sp;
                    if (from == to) {
                        int v = (from == 0) ? gamma_src(n, cell.gamma) : qv.arrow_tgt(word[from - 1]);
                        return Path{v, {}};
                    }
                    sp.source = qv.arrow_src(word[from]);
                    sp.arrows.assign(word.begin() + from, word.begin() + to);
                    return sp;
                };
                if (n % 2 == 0) {
                    // even: all occurrences of AP_{n-1} subwords, coefficient +1
                    int len_w = static_cast<int>(word.size());
                    for (int g2 = 0; g2 < gamma_count(n - 1); ++g2) {
                        std::vector<int> sub = gamma_word(n - 1, g2);
                        int L = static_cast<int>(sub.size());
                        for (int pos = 0; pos + L <= len_w; ++pos) {
                            if (!std::equal(sub.begin(), sub.end(), word.begin() + pos)) continue;
                            // u = word[0..pos), v = word[pos+L..)
                            Path u = subpath(0, pos);
                            Path v = subpath(pos + L, len_w);
                            std::optional<Path> q;
                            if (auto vp = a.concat(v, p)) q = a.concat(*vp, u);
                            emit(g2, q, 1);
                        }
                    }
                } else if (n == 1) {
                    // (a, p) -> (e_src, a.p) - (e_tgt, p.a)
                    int arr = word[0];
                    emit(qv.arrow_src(arr), a.concat(subpath(0, 1), p), 1);
                    emit(qv.arrow_tgt(arr), a.concat(p, subpath(0, 1)), -1);
                } else {
                    // odd >= 3: unique AP_{n-1} prefix minus unique AP_{n-1} suffix
                    int len_w = static_cast<int>(word.size());
                    int left = -1, left_len = -1, right = -1, right_pos = -1;
                    for (int g2 = 0; g2 < gamma_count(n - 1); ++g2) {
                        std::vector<int> sub = gamma_word(n - 1, g2);
                        int L = static_cast<int>(sub.size());
                        if (L > len_w) continue;
                        if (std::equal(sub.begin(), sub.end(), word.begin())) {
                            if (left >= 0) throw Error(ErrorCode::Internal, "non-unique AP prefix");
                            left = g2;
                            left_len = L;
                        }
                        if (std::equal(sub.begin(), sub.end(), word.end() - L)) {
                            if (right >= 0) throw Error(ErrorCode::Internal, "non-unique AP suffix");
                            right = g2;
                            right_pos = len_w - L;
                        }
                    }
                    if (left < 0 || right < 0)
                        throw Error(ErrorCode::Internal, "odd bardzell differential lacks prefix/suffix");
                    {
                        Path tail = subpath(left_len, len_w);
                        emit(left, a.concat(tail, p), 1);
                    }
                    {
                        Path head = subpath(0, right_pos);
                        emit(right, a.concat(p, head), -1);
                    }
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
