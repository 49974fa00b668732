#ifndef ARBHH_HOCHSCHILD_HPP
#define ARBHH_HOCHSCHILD_HPP

#include "arbhh/hh_table.hpp"
#include "arbhh/monomial_algebra.hpp"

namespace arbhh::hochschild {

/// A quiver whose underlying undirected graph is a tree and whose arrows all
/// sit in homological degree zero. Construction validates (NOT_A_TREE).
struct TreeQuiver {
    quiver::Quiver q;
    static TreeQuiver checked(quiver::Quiver q);
};

/// Closed form: HH of Perf of a tree quiver is free of rank #vertices,
/// concentrated in degree zero.
HHTable hh_tree(const TreeQuiver& t, const linalg::FieldSpec& field);

/// Hochschild homology of a monomial algebra from the reduced bar complex
/// relative to the semisimple vertex subalgebra. Weight sectors: the bar
/// differential preserves total weight, so every sector with weight <=
/// max_weight is computed exactly (no widening is ever required here).
HHTable hh_bar(const quiver::MonomialAlgebra& a, int max_degree, int max_weight,
               const linalg::FieldSpec& field);

/// Same invariant via Bardzell's minimal resolution of a monomial algebra
/// (associated-path basis, combinatorial splitting differential). The
/// independent cross-check partner of hh_bar.
HHTable hh_bardzell(const quiver::MonomialAlgebra& a, int max_degree, int max_weight,
                    const linalg::FieldSpec& field);

/// Associated paths of Bardzell's resolution, exposed for tests. ap[n] holds
/// AP_n as arrow words; ap[0] is conventionally empty (vertices), ap[1] the
/// arrows.
std::vector<std::vector<std::vector<int>>> bardzell_ap_sets(const quiver::MonomialAlgebra& a,
                                                            int max_n, int max_weight);

} // namespace arbhh::hochschild

#endif
