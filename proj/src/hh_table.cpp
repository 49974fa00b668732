#include "arbhh/hh_table.hpp"

#include "arbhh/error.hpp"

namespace arbhh::hochschild {

std::string SectorId::to_string() const {
    switch (kind) {
        case Kind::Total: return "total";
        case Kind::TrivialClass: return "trivial";
        case Kind::Weight: return "w:" + std::to_string(weight);
        case Kind::ConjClass: return "c:" + word;
    }
    return "?";
}

SectorId SectorId::from_string(const std::string& s) {
    if (s == "total") return total();
    if (s == "trivial") return trivial();
    if (s.rfind("w:", 0) == 0) return weight_sector(std::stoll(s.substr(2)));
    if (s.rfind("c:", 0) == 0) return conj_class(s.substr(2));
    throw Error(ErrorCode::Parse, "bad sector '" + s + "'");
}

void HHTable::add_totals() {
    std::erase_if(entries, [](const auto& kv) { return kv.first.second.kind == SectorId::Kind::Total; });
    std::map<int, RankRange> tot;
    for (const auto& [key, r] : entries) {
        auto& t = tot[key.first];
        t.lower += r.lower;
        if (t.upper.has_value()) {
            if (r.upper.has_value())
                *t.upper += *r.upper;
            else
                t.upper.reset();
        }
    }
    for (const auto& [deg, r] : tot) entries[{deg, SectorId::total()}] = r;
}

std::map<int, RankRange> HHTable::totals() const {
    std::map<int, RankRange> out;
    for (const auto& [key, r] : entries)
        if (key.second.kind == SectorId::Kind::Total) out[key.first] = r;
    return out;
}

bool HHTable::all_exact() const {
    for (const auto& [key, r] : entries)
        if (!r.is_exact()) return false;
    return true;
}

} // namespace arbhh::hochschild
