#include "arbhh/free_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arbhh/chain_complex.hpp"
#include "arbhh/error.hpp"

namespace arbhh::hochschild {

FreeGroupPresentation FreeGroupPresentation::make(int rank, std::vector<std::string> labels) {
    if (rank < 0) throw Error(ErrorCode::InvariantViolation, "free group rank must be >= 0");
    if (labels.empty()) {
        for (int i = 0; i < rank; ++i) {
            std::string l = "g" + std::to_string(i + 1);
            labels.push_back(l);
        }
    }
    if (static_cast<int>(labels.size()) != rank)
        throw Error(ErrorCode::InvariantViolation, "generator label count must equal the rank");
    std::set<std::string> dedup(labels.begin(), labels.end());
    if (dedup.size() != labels.size())
        throw Error(ErrorCode::InvariantViolation, "generator labels must be distinct");
    return FreeGroupPresentation{rank, std::move(labels)};
}

Word reduce_word(Word w) {
    Word out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().inv != l.inv)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclically_reduce(Word w) {
    w = reduce_word(std::move(w));
    while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().inv != w.back().inv) {
        w.erase(w.begin());
        w.pop_back();
        w = reduce_word(std::move(w));
    }
    return w;
}

Word canonical_cyclic_word(Word w) {
    w = cyclically_reduce(std::move(w));
    if (w.empty()) return w;
    Word best = w;
    Word rot = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end())) best = rot;
    }
    return best;
}

std::string render_word(const Word& w, const FreeGroupPresentation& g) {
    if (w.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long long count = static_cast<long long>(j - i) * (w[i].inv ? -1 : 1);
        if (!out.empty()) out += ".";
        out += g.labels.at(w[i].gen);
        if (count != 1) out += "^" + std::to_string(count);
        i = j;
    }
    return out;
}

std::vector<Word> enumerate_conjugacy_classes(const FreeGroupPresentation& g, int max_cyclic_length) {
    std::set<Word> classes;
    std::vector<Word> frontier = {Word{}};
    for (int len = 1; len <= max_cyclic_length; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int gen = 0; gen < g.rank; ++gen) {
                for (bool inv : {false, true}) {
                    Letter l{gen, inv};
                    if (!w.empty() && w.back().gen == gen && w.back().inv != inv) continue; // not reduced
                    Word w2 = w;
                    w2.push_back(l);
                    next.push_back(std::move(w2));
                }
            }
        }
        for (const Word& w : next) {
            // cyclically reduced: first and last letters must not cancel
            if (w.size() >= 2 && w.front().gen == w.back().gen && w.front().inv != w.back().inv) continue;
            classes.insert(canonical_cyclic_word(w));
        }
        frontier = std::move(next);
    }
    std::vector<Word> out(classes.begin(), classes.end());
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

/// The length-truncated slice of the Fox two-term complex for one conjugacy
/// class. C0 = class elements of length <= T, C1 = pairs (u, i) with
/// x_i u in the class and |u| <= T - 1; d(u, i) = [x_i u] - [u x_i].
std::pair<int, int> class_slice_ranks(const FreeGroupPresentation& g, const Word& cls, int T,
                                      const linalg::FieldSpec& field) {
    // class elements of length <= T by conjugation BFS from the core
    std::set<Word> elements;
    std::vector<Word> stack;
    Word core = cls;
    elements.insert(core);
    stack.push_back(core);
    while (!stack.empty()) {
        Word w = stack.back();
        stack.pop_back();
        for (int gen = 0; gen < g.rank; ++gen) {
            for (bool inv : {false, true}) {
                Letter l{gen, inv};
                Letter linv{gen, !inv};
                Word w2;
                w2.push_back(l);
                w2.insert(w2.end(), w.begin(), w.end());
                w2.push_back(linv);
                w2 = reduce_word(std::move(w2));
                if (static_cast<int>(w2.size()) > T) continue;
                if (elements.insert(w2).second) stack.push_back(w2);
            }
        }
    }
    std::vector<Word> c0(elements.begin(), elements.end());
    std::map<Word, int> c0_index;
    for (int i = 0; i < static_cast<int>(c0.size()); ++i) c0_index[c0[i]] = i;

    struct C1Elem {
        Word u;
        int gen;
        bool operator<(const C1Elem& o) const { return gen != o.gen ? gen < o.gen : u < o.u; }
    };
    std::vector<C1Elem> c1;
    for (const Word& w : c0) {
        for (int gen = 0; gen < g.rank; ++gen) {
            Word u;
            u.push_back(Letter{gen, true});
            u.insert(u.end(), w.begin(), w.end());
            u = reduce_word(std::move(u));
            if (static_cast<int>(u.size()) > T - 1) continue;
            c1.push_back(C1Elem{std::move(u), gen});
        }
    }
    std::sort(c1.begin(), c1.end());
    c1.erase(std::unique(c1.begin(), c1.end(),
                         [](const C1Elem& a, const C1Elem& b) { return a.gen == b.gen && a.u == b.u; }),
             c1.end());

    linalg::ChainComplexI cx;
    cx.set_dim(0, static_cast<int>(c0.size()));
    cx.set_dim(1, static_cast<int>(c1.size()));
    for (int col = 0; col < static_cast<int>(c1.size()); ++col) {
        const C1Elem& e = c1[col];
        Word xu = e.u;
        xu.insert(xu.begin(), Letter{e.gen, false});
        xu = reduce_word(std::move(xu));
        Word ux = e.u;
        ux.push_back(Letter{e.gen, false});
        ux = reduce_word(std::move(ux));
        auto it1 = c0_index.find(xu);
        auto it2 = c0_index.find(ux);
        if (it1 == c0_index.end() || it2 == c0_index.end())
            throw Error(ErrorCode::Internal, "fox differential escaped the class slice");
        cx.add_entry(1, it1->second, col, 1);
        cx.add_entry(1, it2->second, col, -1);
    }
    auto ranks = linalg::homology_ranks(cx, field);
    auto get = [&](int d) {
        auto it = ranks.find(d);
        return it == ranks.end() ? 0 : it->second;
    };
    return {get(0), get(1)};
}

} // namespace

HHTable hh_free_group(const FreeGroupPresentation& g, int max_cyclic_length,
                      const linalg::FieldSpec& field) {
    if (max_cyclic_length < 0)
        throw Error(ErrorCode::InvariantViolation, "cyclic length bound must be >= 0");
    HHTable out;
    out.field = field;
    out.truncation = "max_cyclic_length " + std::to_string(max_cyclic_length) +
                     " (class slices widened internally until stable)";

    // trivial class: complex [k^n -> k], all differentials zero
    {
        linalg::ChainComplexI cx;
        cx.set_dim(0, 1);
        cx.set_dim(1, g.rank);
        for (int i = 0; i < g.rank; ++i) {
            // d(x_i^{-1} e_i) = [x_i x_i^{-1}] - [x_i^{-1} x_i] = 1 - 1
            cx.add_entry(1, 0, i, 1 - 1);
        }
        auto ranks = linalg::homology_ranks(cx, field);
        for (const auto& [d, r] : ranks) out.set(d, SectorId::trivial(), r);
    }

    for (const Word& cls : enumerate_conjugacy_classes(g, max_cyclic_length)) {
        int T = static_cast<int>(cls.size()) + 2;
        std::pair<int, int> prev = class_slice_ranks(g, cls, T, field);
        bool stable = false;
        for (int attempt = 0; attempt < 6; ++attempt) {
            std::pair<int, int> next = class_slice_ranks(g, cls, T + 1, field);
            if (next == prev) {
                stable = true;
                break;
            }
            prev = next;
            ++T;
        }
        if (!stable)
            throw Error(ErrorCode::TruncationTooSmall,
                        "class slice ranks did not stabilize for " + render_word(cls, g));
        SectorId s = SectorId::conj_class(render_word(cls, g));
        out.set(0, s, prev.first);
        out.set(1, s, prev.second);
    }
    out.add_totals();
    return out;
}

HHTable hh_laurent(int max_abs_weight, const linalg::FieldSpec& field) {
    if (max_abs_weight < 0)
        throw Error(ErrorCode::InvariantViolation, "weight bound must be >= 0");
    HHTable out;
    out.field = field;
    out.truncation = "|weight| <= " + std::to_string(max_abs_weight);
    for (int w = -max_abs_weight; w <= max_abs_weight; ++w) {
        // weight-w slice of [A -> A], u |-> x u - u x over A = k[x, x^-1]:
        // one generator x^{w-1} dx in degree 1, x^w in degree 0.
        linalg::ChainComplexI cx;
        cx.set_dim(0, 1);
        cx.set_dim(1, 1);
        long long coeff = 1 - 1; // x.x^{w-1} and x^{w-1}.x both hit x^w
        cx.add_entry(1, 0, 0, coeff);
        auto ranks = linalg::homology_ranks(cx, field);
        for (const auto& [d, r] : ranks) out.set(d, SectorId::weight_sector(w), r);
    }
    out.add_totals();
    return out;
}

} // namespace arbhh::hochschild
