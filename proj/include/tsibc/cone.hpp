#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tsibc/ext_time.hpp"
#include "tsibc/query.hpp"
#include "tsibc/scg.hpp"
#include "tsibc/temporal.hpp"

namespace tsibc {

// For each intervention, the first instant at or after it on the same series
// that is not itself an intervention.
std::map<TemporalVertex, std::int64_t> intervention_release_times(const CausalQuery& q);

// Per-series entry thresholds into the non-conditionable set NC.
// S_t is in NC iff t >= threshold(S) and S_t is not an intervention;
// CD is NC plus the interventions.
class NcProfile {
public:
    NcProfile() = default;
    NcProfile(std::size_t series_count, const CausalQuery& q);

    ExtTime threshold(SeriesIdx s) const { return thresholds_[static_cast<std::size_t>(s)]; }
    const std::vector<ExtTime>& thresholds() const { return thresholds_; }
    const CausalQuery& query() const { return query_; }
    std::size_t series_count() const { return thresholds_.size(); }

    bool is_intervention(const TemporalVertex& v) const;
    bool in_nc(const TemporalVertex& v) const;
    bool in_cd(const TemporalVertex& v) const;

    // First non-intervention instant >= v.time on v's series.
    std::int64_t release_time(const TemporalVertex& v) const;

    // Largest t <= bound with S_t in NC and S_t != excluded; -inf if none.
    ExtTime latest_nc_at_or_before(SeriesIdx s, ExtTime bound,
                                   const std::optional<TemporalVertex>& excluded) const;

    void set_threshold(SeriesIdx s, ExtTime t) { thresholds_[static_cast<std::size_t>(s)] = t; }

private:
    std::span<const std::int64_t> times_of(SeriesIdx s) const;

    std::vector<ExtTime> thresholds_;
    CausalQuery query_;
    // Interventions sorted by (series, time), stored as parallel arrays.
    std::vector<SeriesIdx> intervention_series_;
    std::vector<std::int64_t> intervention_times_;
};

struct TncStats {
    // Number of times each series was expanded by the traversal.
    std::vector<int> expansions;
};

// Earliest NC entry per series, linear time.
NcProfile compute_t_nc(const Scg& g, const CausalQuery& q, TncStats* stats = nullptr);

bool in_cd(const NcProfile& p, const TemporalVertex& v);
bool in_nc(const NcProfile& p, const TemporalVertex& v);

}  // namespace tsibc
