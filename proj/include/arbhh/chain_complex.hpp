#ifndef ARBHH_CHAIN_COMPLEX_HPP
#define ARBHH_CHAIN_COMPLEX_HPP

#include <map>
#include <vector>

#include "arbhh/sparse_matrix.hpp"

namespace arbhh::linalg {

/// A chain complex assembled with integer coefficients, homological
/// convention: the differential in degree d maps C_d -> C_{d-1} and is a
/// matrix of shape dims(d-1) x dims(d). Cohomological complexes are stored by
/// negating degrees. Ranks are taken over a field chosen at evaluation time.
struct ChainComplexI {
    std::map<int, int> dims;                            // degree -> dimension (absent = 0)
    std::map<int, std::vector<IntEntry>> differentials; // degree d -> entries of C_d -> C_{d-1}

    int dim(int d) const {
        auto it = dims.find(d);
        return it == dims.end() ? 0 : it->second;
    }
    void set_dim(int d, int n) {
        if (n != 0) dims[d] = n;
    }
    void add_entry(int d, int row, int col, long long val) {
        if (val != 0) differentials[d].push_back(IntEntry{row, col, val});
    }

    /// d∘d = 0 as integer matrices (hence over every field); also checks
    /// shapes. Throws COMPLEX_INVALID on violation.
    void validate() const;

    long long euler_characteristic() const;
};

/// Homology ranks per degree over the chosen field; degrees outside the
/// support are zero and omitted. Validates d∘d = 0 first.
std::map<int, int> homology_ranks(const ChainComplexI& c, const FieldSpec& field);

/// Rank of one differential over the field.
int differential_rank(const ChainComplexI& c, int degree, const FieldSpec& field);

} // namespace arbhh::linalg

#endif
