#ifndef ARBHH_MONOMIAL_ALGEBRA_HPP
#define ARBHH_MONOMIAL_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "arbhh/quiver.hpp"

namespace arbhh::quiver {

/// Path algebra of a quiver modulo monomial relations (forbidden words).
/// Nonzero paths are exactly the paths containing no relation as a
/// contiguous subword; together with the lazy paths they form the canonical
/// basis. Relations must be an antichain under the subword order.
class MonomialAlgebra {
public:
    MonomialAlgebra() = default;
    MonomialAlgebra(Quiver q, std::vector<std::vector<int>> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<std::vector<int>>& relations() const { return relations_; }

    int path_weight(const Path& p) const;
    int path_degree(const Path& p) const;
    Path lazy(int vertex) const { return Path{vertex, {}}; }
    int path_source(const Path& p) const { return p.source; }
    int path_target(const Path& p) const {
        return p.arrows.empty() ? p.source : quiver_.arrow_tgt(p.arrows.back());
    }

    /// True iff the arrow word contains some relation as a contiguous
    /// subword (the path is zero in the algebra).
    bool word_is_zero(const std::vector<int>& arrows) const;

    /// Diagrammatic concatenation p then q; nullopt encodes the zero element
    /// (non-composable or killed by a relation).
    std::optional<Path> concat(const Path& p, const Path& q) const;

    /// Function-order composition: compose(p, q) = "q, then p"; zero unless
    /// target(q) == source(p).
    std::optional<Path> compose(const Path& p, const Path& q) const { return concat(q, p); }

    bool is_finite_dimensional() const;

    /// All basis paths of weight <= max_weight (including lazy paths), in
    /// (length, lexicographic-on-arrow-ids) order. Without a bound the
    /// algebra must be finite dimensional, else BASIS_INFINITE_WITHOUT_BOUND.
    std::vector<Path> enumerate_basis(std::optional<int> max_weight) const;

    /// True when every arrow sits in homological degree 0.
    bool degree_zero() const;

    bool path_less(const Path& a, const Path& b) const;
    std::string path_string(const Path& p) const;

private:
    Quiver quiver_;
    std::vector<std::vector<int>> relations_;
    std::vector<int> arrow_lex_rank_; // rank of each arrow in id order
};

} // namespace arbhh::quiver

#endif
