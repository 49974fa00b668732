#include "arbhh/chain_complex.hpp"

namespace arbhh::linalg {

void ChainComplexI::validate() const {
    for (const auto& [d, entries] : differentials) {
        int r = dim(d - 1), c = dim(d);
        for (const IntEntry& e : entries)
            if (e.row < 0 || e.row >= r || e.col < 0 || e.col >= c)
                throw Error(ErrorCode::ComplexInvalid,
                            "differential in degree " + std::to_string(d) + " does not match dims");
    }
    // d_{d-1} * d_d = 0 with exact integer arithmetic
    for (const auto& [d, entries] : differentials) {
        auto lower = differentials.find(d - 1);
        if (lower == differentials.end()) continue;
        std::map<std::pair<int, int>, long long> acc;
        std::map<int, std::vector<std::pair<int, long long>>> by_row;
        for (const IntEntry& e : normalize_entries(entries)) by_row[e.row].push_back({e.col, e.val});
        for (const IntEntry& a : normalize_entries(lower->second)) {
            auto it = by_row.find(a.col);
            if (it == by_row.end()) continue;
            for (const auto& [c2, v2] : it->second) acc[{a.row, c2}] += a.val * v2;
        }
        for (const auto& [key, v] : acc)
            if (v != 0)
                throw Error(ErrorCode::ComplexInvalid, "d(d-1) o d(" + std::to_string(d) + ") != 0");
    }
}

long long ChainComplexI::euler_characteristic() const {
    long long chi = 0;
    for (const auto& [d, n] : dims) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(n);
    return chi;
}

namespace {

template <class F>
int rank_of(const F& f, const ChainComplexI& c, int degree) {
    auto it = c.differentials.find(degree);
    if (it == c.differentials.end()) return 0;
    auto m = SparseMatrix<F>::from_int_entries(f, c.dim(degree - 1), c.dim(degree), it->second);
    return rank(f, m);
}

} // namespace

int differential_rank(const ChainComplexI& c, int degree, const FieldSpec& field) {
    return with_field(field, [&](auto f) { return rank_of(f, c, degree); });
}

std::map<int, int> homology_ranks(const ChainComplexI& c, const FieldSpec& field) {
    c.validate();
    std::map<int, int> out;
    for (const auto& [d, n] : c.dims) {
        int rank_d = differential_rank(c, d, field);       // rank of C_d -> C_{d-1}
        int rank_d1 = differential_rank(c, d + 1, field);  // rank of C_{d+1} -> C_d
        int h = n - rank_d - rank_d1;
        if (h < 0) throw Error(ErrorCode::Internal, "negative homology rank");
        if (h > 0) out[d] = h;
    }
    return out;
}

} // namespace arbhh::linalg
