#ifndef ARBHH_HH_TABLE_HPP
#define ARBHH_HH_TABLE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbhh/field.hpp"

namespace arbhh::hochschild {

/// Sector labels for Hochschild rank tables: the whole thing, a weight
/// slice, or a conjugacy-class slice (free-group mode).
struct SectorId {
    enum class Kind { Total, TrivialClass, Weight, ConjClass };
    Kind kind = Kind::Total;
    long long weight = 0;  // Kind::Weight
    std::string word;      // Kind::ConjClass, canonical cyclic word rendering

    static SectorId total() { return SectorId{Kind::Total, 0, ""}; }
    static SectorId trivial() { return SectorId{Kind::TrivialClass, 0, ""}; }
    static SectorId weight_sector(long long w) { return SectorId{Kind::Weight, w, ""}; }
    static SectorId conj_class(std::string w) { return SectorId{Kind::ConjClass, 0, std::move(w)}; }

    bool operator==(const SectorId& o) const {
        return kind == o.kind && weight == o.weight && word == o.word;
    }
    bool operator<(const SectorId& o) const {
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        if (weight != o.weight) return weight < o.weight;
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        return word < o.word;
    }
    std::string to_string() const;
    static SectorId from_string(const std::string& s);
};

/// A rank that may only be known as an interval (lower, upper); upper absent
/// means unbounded above under the current truncation.
struct RankRange {
    long long lower = 0;
    std::optional<long long> upper = 0;

    static RankRange exact(long long r) { return RankRange{r, r}; }
    bool is_exact() const { return upper.has_value() && *upper == lower; }
    bool operator==(const RankRange& o) const { return lower == o.lower && upper == o.upper; }
};

/// Ranks of Hochschild homology indexed by (homological degree, sector).
struct HHTable {
    linalg::FieldSpec field;
    std::string truncation; // human-readable description of the bound used
    std::map<std::pair<int, SectorId>, RankRange> entries;

    void set(int degree, const SectorId& s, long long rank) {
        if (rank != 0) entries[{degree, s}] = RankRange::exact(rank);
    }
    void set_range(int degree, const SectorId& s, RankRange r) {
        if (r.lower != 0 || !r.is_exact()) entries[{degree, s}] = r;
    }
    long long rank(int degree, const SectorId& s) const {
        auto it = entries.find({degree, s});
        return it == entries.end() ? 0 : it->second.lower;
    }

    /// Recomputes Total rows as sums of the listed non-Total sectors.
    void add_totals();

    /// Per-degree Total ranks.
    std::map<int, RankRange> totals() const;

    bool all_exact() const;
    bool operator==(const HHTable& o) const {
        return field == o.field && entries == o.entries;
    }
};

} // namespace arbhh::hochschild

#endif
