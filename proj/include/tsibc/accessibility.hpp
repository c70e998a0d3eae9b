#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tsibc/cone.hpp"
#include "tsibc/ext_time.hpp"
#include "tsibc/scg.hpp"
#include "tsibc/temporal.hpp"

namespace tsibc {

// Excludes the instantaneous realizations of one SCG edge from -> to.
// Lagged realizations of the same edge stay usable.
struct ForbiddenArrow {
    SeriesIdx from = 0;
    SeriesIdx to = 0;
    bool operator==(const ForbiddenArrow&) const = default;
};

class AccessibilityProfile {
public:
    static constexpr SeriesIdx kAnchor = -1;

    // Empty anchor list never happens; a single anchor is the usual case,
    // several anchors stand for the fictitious combined vertex.
    std::vector<TemporalVertex> anchors;
    std::vector<ExtTime> ceilings;
    std::optional<ForbiddenArrow> forbidden;
    // Successor series on the route that produced each ceiling
    // (kAnchor when the successor is an anchor itself).
    std::vector<SeriesIdx> via;
    // Index into `anchors` of the anchor reached from each series.
    std::vector<int> origin;

    bool combined() const { return anchors.size() != 1; }
    ExtTime ceiling(SeriesIdx s) const { return ceilings[static_cast<std::size_t>(s)]; }

    // Directed route from f (assumed accessible) to its anchor, following `via`.
    std::vector<TemporalVertex> route(const TemporalVertex& f) const;
};

// Max-heap relaxation. The anchor may be an intervention or the effect.
AccessibilityProfile compute_accessibility(const Scg& g, const NcProfile& p, const TemporalVertex& anchor,
                                           const std::optional<ForbiddenArrow>& forbidden = std::nullopt);

// Lag-0 realizations of every SCG edge (from, to) accepted by the filter are
// excluded; lagged realizations stay usable.
using Lag0Filter = std::function<bool(SeriesIdx from, SeriesIdx to)>;

AccessibilityProfile compute_accessibility(const Scg& g, const NcProfile& p, const TemporalVertex& anchor,
                                           const Lag0Filter& lag0_forbidden);

// Single traversal seeded from all interventions of the profile's query.
AccessibilityProfile compute_accessibility_combined(const Scg& g, const NcProfile& p, const CausalQuery& q);

// Same, seeded from an explicit anchor list.
AccessibilityProfile compute_accessibility_multi(const Scg& g, const NcProfile& p,
                                                 const std::vector<TemporalVertex>& anchors);

bool is_nc_accessible(const NcProfile& p, const AccessibilityProfile& a, const TemporalVertex& f);

// Corollary 1: F forks towards both anchors.
bool fork_exists_free(const NcProfile& p, const AccessibilityProfile& a_x, const AccessibilityProfile& a_y,
                      SeriesIdx f);

}  // namespace tsibc
