#ifndef ARBHH_QUIVER_HPP
#define ARBHH_QUIVER_HPP

#include <string>
#include <vector>

#include "arbhh/error.hpp"

namespace arbhh::quiver {

struct Arrow {
    std::string id;
    std::string src;
    std::string tgt;
    int degree = 0; // homological degree
    int weight = 1; // filtration weight; defaults to 1 so weight = path length
};

/// A finite directed graph. Vertices and arrows are addressed by index
/// internally; ids are for I/O and deterministic ordering.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& id) const;
    int arrow_index(const std::string& id) const;
    int arrow_src(int a) const { return src_idx_[a]; }
    int arrow_tgt(int a) const { return tgt_idx_[a]; }

    /// Checks id uniqueness and endpoint existence, builds index tables.
    /// Must be called after construction and before use.
    void finalize();

    bool finalized() const { return !vertices.empty() && src_idx_.size() == arrows.size(); }

private:
    std::vector<int> src_idx_, tgt_idx_;
};

/// True iff the underlying undirected graph is a tree (connected, acyclic).
bool is_tree(const Quiver& q);

/// A path: a sequence of composable arrows written left to right ("first
/// arrow, then second"), or a lazy path at a vertex. Composability means
/// tgt(arrows[i]) == src(arrows[i+1]).
struct Path {
    int source = -1;         // vertex index (source of the whole path)
    std::vector<int> arrows; // arrow indices

    int length() const { return static_cast<int>(arrows.size()); }
    bool is_lazy() const { return arrows.empty(); }
    bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (arrows != o.arrows) return arrows < o.arrows;
        return source < o.source;
    }
};

} // namespace arbhh::quiver

#endif
