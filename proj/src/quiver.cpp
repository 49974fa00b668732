#include "arbhh/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arbhh::quiver {

void Quiver::finalize() {
    std::set<std::string> vids(vertices.begin(), vertices.end());
    if (vids.size() != vertices.size())
        throw Error(ErrorCode::InvariantViolation, "duplicate vertex ids");
    std::set<std::string> aids;
    for (const Arrow& a : arrows)
        if (!aids.insert(a.id).second)
            throw Error(ErrorCode::InvariantViolation, "duplicate arrow id '" + a.id + "'");
    std::map<std::string, int> vmap;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) vmap[vertices[i]] = i;
    src_idx_.clear();
    tgt_idx_.clear();
    for (const Arrow& a : arrows) {
        auto s = vmap.find(a.src), t = vmap.find(a.tgt);
        if (s == vmap.end() || t == vmap.end())
            throw Error(ErrorCode::InvariantViolation, "arrow '" + a.id + "' has unknown endpoint");
        src_idx_.push_back(s->second);
        tgt_idx_.push_back(t->second);
    }
}

int Quiver::vertex_index(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        if (vertices[i] == id) return i;
    throw Error(ErrorCode::InvariantViolation, "unknown vertex '" + id + "'");
}

int Quiver::arrow_index(const std::string& id) const {
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
        if (arrows[i].id == id) return i;
    throw Error(ErrorCode::InvariantViolation, "unknown arrow '" + id + "'");
}

bool is_tree(const Quiver& q) {
    size_t n = q.vertices.size();
    if (n == 0) return false;
    if (q.arrows.size() != n - 1) return false;
    // connectivity of the underlying undirected graph
    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        int s = q.arrow_src(a), t = q.arrow_tgt(a);
        if (s == t) return false; // loop
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

} // namespace arbhh::quiver
