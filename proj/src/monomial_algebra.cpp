#include "arbhh/monomial_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arbhh::quiver {

namespace {

bool contains_subword(const std::vector<int>& word, const std::vector<int>& pattern) {
    if (pattern.size() > word.size()) return false;
    for (size_t i = 0; i + pattern.size() <= word.size(); ++i)
        if (std::equal(pattern.begin(), pattern.end(), word.begin() + i)) return true;
    return false;
}

} // namespace

MonomialAlgebra::MonomialAlgebra(Quiver q, std::vector<std::vector<int>> relations)
    : quiver_(std::move(q)), relations_(std::move(relations)) {
    if (!quiver_.finalized()) quiver_.finalize();
    for (const Arrow& a : quiver_.arrows)
        if (a.weight < 1)
            throw Error(ErrorCode::InvariantViolation,
                        "arrow '" + a.id + "' has weight < 1; the length filtration needs positive weights");
    for (const auto& r : relations_) {
        if (r.size() < 2)
            throw Error(ErrorCode::InvariantViolation, "relations must be paths of length >= 2");
        for (size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 0 || r[i] >= static_cast<int>(quiver_.arrows.size()))
                throw Error(ErrorCode::InvariantViolation, "relation references unknown arrow");
            if (i + 1 < r.size() && quiver_.arrow_tgt(r[i]) != quiver_.arrow_src(r[i + 1]))
                throw Error(ErrorCode::InvariantViolation, "relation is not a composable path");
        }
    }
    for (size_t i = 0; i < relations_.size(); ++i)
        for (size_t j = 0; j < relations_.size(); ++j)
            if (i != j && contains_subword(relations_[i], relations_[j]))
                throw Error(ErrorCode::InvariantViolation,
                            "relation set is not an antichain under the subword order");
    std::set<std::vector<int>> dedup(relations_.begin(), relations_.end());
    if (dedup.size() != relations_.size())
        throw Error(ErrorCode::InvariantViolation, "duplicate relation");

    std::vector<int> order(quiver_.arrows.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return quiver_.arrows[a].id < quiver_.arrows[b].id; });
    arrow_lex_rank_.assign(order.size(), 0);
    for (int r = 0; r < static_cast<int>(order.size()); ++r) arrow_lex_rank_[order[r]] = r;
}

int MonomialAlgebra::path_weight(const Path& p) const {
    int w = 0;
    for (int a : p.arrows) w += quiver_.arrows[a].weight;
    return w;
}

int MonomialAlgebra::path_degree(const Path& p) const {
    int d = 0;
    for (int a : p.arrows) d += quiver_.arrows[a].degree;
    return d;
}

bool MonomialAlgebra::word_is_zero(const std::vector<int>& arrows) const {
    for (const auto& r : relations_)
        if (contains_subword(arrows, r)) return true;
    return false;
}

std::optional<Path> MonomialAlgebra::concat(const Path& p, const Path& q) const {
    if (path_target(p) != path_source(q)) return std::nullopt;
    Path out;
    out.source = p.source;
    out.arrows = p.arrows;
    out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
    if (word_is_zero(out.arrows)) return std::nullopt;
    return out;
}

bool MonomialAlgebra::degree_zero() const {
    for (const Arrow& a : quiver_.arrows)
        if (a.degree != 0) return false;
    return true;
}

bool MonomialAlgebra::path_less(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    for (int i = 0; i < a.length(); ++i)
        if (a.arrows[i] != b.arrows[i])
            return arrow_lex_rank_[a.arrows[i]] < arrow_lex_rank_[b.arrows[i]];
    if (a.source != b.source) return quiver_.vertices[a.source] < quiver_.vertices[b.source];
    return false;
}

std::string MonomialAlgebra::path_string(const Path& p) const {
    if (p.is_lazy()) return "e(" + quiver_.vertices[p.source] + ")";
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += ".";
        s += quiver_.arrows[p.arrows[i]].id;
    }
    return s;
}

// The nonzero-path automaton: states are (vertex, proper prefix of a
// relation that is the longest dangerous suffix of the word read so far).
// The algebra is finite dimensional iff this automaton is acyclic on the
// states reachable from the lazy states.
namespace {

struct PrefixAutomaton {
    const MonomialAlgebra& alg;
    std::vector<std::vector<int>> states; // arrow words; states[v] for v < #vertices is empty (at vertex v)
    std::map<std::vector<int>, int> index_of;
    int n_vertices;

    explicit PrefixAutomaton(const MonomialAlgebra& a) : alg(a) {
        n_vertices = static_cast<int>(a.quiver().vertices.size());
        for (int v = 0; v < n_vertices; ++v) states.push_back({});
        for (const auto& r : alg.relations())
            for (size_t len = 1; len + 1 <= r.size(); ++len) {
                std::vector<int> pre(r.begin(), r.begin() + len);
                if (!index_of.count(pre)) {
                    index_of[pre] = static_cast<int>(states.size());
                    states.push_back(pre);
                }
            }
    }

    int state_vertex(int s) const {
        if (s < n_vertices) return s;
        return alg.quiver().arrow_tgt(states[s].back());
    }

    // -1 means the extended word is zero.
    int transition(int s, int arrow) const {
        if (alg.quiver().arrow_src(arrow) != state_vertex(s)) return -1;
        std::vector<int> w = states[s];
        w.push_back(arrow);
        // reject if w now ends in a full relation
        for (const auto& r : alg.relations())
            if (w.size() >= r.size() && std::equal(r.begin(), r.end(), w.end() - r.size())) return -1;
        // longest suffix of w that is a proper relation prefix
        for (size_t len = w.size(); len > 0; --len) {
            std::vector<int> suf(w.end() - len, w.end());
            auto it = index_of.find(suf);
            if (it != index_of.end()) return it->second;
        }
        return alg.quiver().arrow_tgt(arrow); // lazy state at target vertex
    }
};

} // namespace

bool MonomialAlgebra::is_finite_dimensional() const {
    PrefixAutomaton aut(*this);
    int n = static_cast<int>(aut.states.size());
    int n_arrows = static_cast<int>(quiver_.arrows.size());
    // DFS cycle detection on reachable states
    std::vector<int> color(n, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<int, int>> stack;
    for (int start = 0; start < aut.n_vertices; ++start) {
        if (color[start] == 2) continue;
        stack.push_back({start, 0});
        color[start] = 1;
        while (!stack.empty()) {
            auto& [s, next_arrow] = stack.back();
            if (next_arrow >= n_arrows) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            int a = next_arrow++;
            int t = aut.transition(s, a);
            if (t < 0) continue;
            if (color[t] == 1) return false; // cycle
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    return true;
}

std::vector<Path> MonomialAlgebra::enumerate_basis(std::optional<int> max_weight) const {
    if (!max_weight.has_value() && !is_finite_dimensional())
        throw Error(ErrorCode::BasisInfiniteWithoutBound,
                    "algebra is infinite dimensional; enumerate_basis needs a weight bound");
    std::vector<Path> out;
    for (int v = 0; v < static_cast<int>(quiver_.vertices.size()); ++v) out.push_back(lazy(v));
    // DFS extension; termination by weight bound or finiteness checked above
    std::vector<Path> frontier = out;
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
            int pt = path_target(p);
            for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a) {
                if (quiver_.arrow_src(a) != pt) continue;
                Path q = p;
                q.arrows.push_back(a);
                if (max_weight && path_weight(q) > *max_weight) continue;
                if (word_is_zero(q.arrows)) continue;
                next.push_back(q);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) { return path_less(a, b); });
    return out;
}

} // namespace arbhh::quiver
