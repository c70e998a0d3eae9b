#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsibc/scg.hpp"
#include "tsibc/temporal.hpp"

namespace tsibc {

// Interventions do(x^i at time) and effects y^j at time, relative to t = 0.
// Intervention times after the effect are accepted here and removed by
// preprocessing.
struct CausalQuery {
    std::vector<TemporalVertex> interventions;
    std::vector<TemporalVertex> effects;

    // Throws InvalidQuery / OverlapError / UnknownVertex.
    void validate(const Scg& g) const;

    // Query with every time shifted by `delta`.
    CausalQuery shifted(std::int64_t delta) const;

    // Largest gamma among interventions relative to effect time 0 (>= 0).
    std::int64_t max_gamma() const;

    bool operator==(const CausalQuery&) const = default;
};

// "SERIES@TIME" -> vertex. Throws InvalidQuery or UnknownVertex.
TemporalVertex parse_temporal(const Scg& g, std::string_view spec);

CausalQuery make_query(const Scg& g, const std::vector<std::string>& dos,
                       const std::vector<std::string>& effects);

}  // namespace tsibc
