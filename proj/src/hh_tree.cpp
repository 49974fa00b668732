#include "arbhh/hochschild.hpp"

namespace arbhh::hochschild {

TreeQuiver TreeQuiver::checked(quiver::Quiver q) {
    if (!q.finalized()) q.finalize();
    if (!quiver::is_tree(q))
        throw Error(ErrorCode::NotATree, "underlying undirected graph is not a tree");
    for (const auto& a : q.arrows)
        if (a.degree != 0)
            throw Error(ErrorCode::NotATree, "tree quiver arrows must sit in degree 0");
    return TreeQuiver{std::move(q)};
}

HHTable hh_tree(const TreeQuiver& t, const linalg::FieldSpec& field) {
    HHTable out;
    out.field = field;
    out.truncation = "none (tree quiver closed form)";
    out.set(0, SectorId::weight_sector(0), static_cast<long long>(t.q.vertices.size()));
    out.add_totals();
    return out;
}

} // namespace arbhh::hochschild
