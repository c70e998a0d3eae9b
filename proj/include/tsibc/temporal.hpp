#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "tsibc/scg.hpp"

namespace tsibc {

struct TemporalVertex {
    SeriesIdx series = 0;
    std::int64_t time = 0;

    auto operator<=>(const TemporalVertex&) const = default;
};

struct TemporalVertexHash {
    std::size_t operator()(const TemporalVertex& v) const {
        return std::hash<std::int64_t>()(v.time * 1000003 + v.series);
    }
};

struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool contains(std::int64_t t) const { return lo <= t && t <= hi; }
    std::int64_t length() const { return hi - lo + 1; }
    bool operator==(const Window&) const = default;
};

inline std::string to_string(const Scg& g, const TemporalVertex& v) {
    return g.name(v.series) + "_" + std::to_string(v.time);
}

}  // namespace tsibc
