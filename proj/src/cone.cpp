#include "tsibc/cone.hpp"

#include <algorithm>
#include <deque>

#include "tsibc/errors.hpp"

namespace tsibc {

std::map<TemporalVertex, std::int64_t> intervention_release_times(const CausalQuery& q) {
    std::map<SeriesIdx, std::vector<std::int64_t>> by_series;
    for (const auto& x : q.interventions) by_series[x.series].push_back(x.time);
    std::map<TemporalVertex, std::int64_t> out;
    for (auto& [s, times] : by_series) {
        std::sort(times.begin(), times.end());
        // Walk backwards so each member of a consecutive run inherits the
        // release time of its successor.
        std::int64_t release = 0;
        for (std::size_t k = times.size(); k-- > 0;) {
            if (k + 1 == times.size() || times[k] + 1 != times[k + 1]) release = times[k] + 1;
            out[{s, times[k]}] = release;
        }
    }
    return out;
}

NcProfile::NcProfile(std::size_t series_count, const CausalQuery& q)
    : thresholds_(series_count, ExtTime::pos_inf()), query_(q) {
    std::vector<TemporalVertex> xs = q.interventions;
    for (const auto& x : xs)
        if (x.series < 0 || static_cast<std::size_t>(x.series) >= series_count)
            throw UnknownVertex("#" + std::to_string(x.series));
    std::sort(xs.begin(), xs.end());
    for (const auto& x : xs) {
        intervention_series_.push_back(x.series);
        intervention_times_.push_back(x.time);
    }
}

std::span<const std::int64_t> NcProfile::times_of(SeriesIdx s) const {
    if (s < 0 || static_cast<std::size_t>(s) >= thresholds_.size()) throw UnknownVertex("#" + std::to_string(s));
    auto [lo, hi] = std::equal_range(intervention_series_.begin(), intervention_series_.end(), s);
    auto first = static_cast<std::size_t>(lo - intervention_series_.begin());
    return {intervention_times_.data() + first, static_cast<std::size_t>(hi - lo)};
}

bool NcProfile::is_intervention(const TemporalVertex& v) const {
    auto t = times_of(v.series);
    return std::binary_search(t.begin(), t.end(), v.time);
}

bool NcProfile::in_nc(const TemporalVertex& v) const {
    return ExtTime(v.time) >= threshold(v.series) && !is_intervention(v);
}

bool NcProfile::in_cd(const TemporalVertex& v) const { return in_nc(v) || is_intervention(v); }

std::int64_t NcProfile::release_time(const TemporalVertex& v) const {
    auto t = times_of(v.series);
    auto it = std::lower_bound(t.begin(), t.end(), v.time);
    std::int64_t cur = v.time;
    while (it != t.end() && *it == cur) {
        ++cur;
        ++it;
    }
    return cur;
}

ExtTime NcProfile::latest_nc_at_or_before(SeriesIdx s, ExtTime bound,
                                          const std::optional<TemporalVertex>& excluded) const {
    ExtTime lo = threshold(s);
    if (!bound.finite() || !lo.finite()) return ExtTime::neg_inf();
    auto t = times_of(s);
    std::int64_t cur = bound.value();
    // Step down past intervention blocks and the excluded vertex; each block
    // and the exclusion are passed at most once.
    auto it = std::upper_bound(t.begin(), t.end(), cur);
    while (true) {
        if (ExtTime(cur) < lo) return ExtTime::neg_inf();
        if (it != t.begin() && *(it - 1) == cur) {
            --cur;
            --it;
            continue;
        }
        if (excluded && excluded->series == s && excluded->time == cur) {
            --cur;
            continue;
        }
        return ExtTime(cur);
    }
}

NcProfile compute_t_nc(const Scg& g, const CausalQuery& q, TncStats* stats) {
    NcProfile p(g.size(), q);
    if (stats) stats->expansions.assign(g.size(), 0);

    std::vector<TemporalVertex> order = q.interventions;
    // Decreasing gamma means increasing time; ties by series id.
    std::sort(order.begin(), order.end(), [](const TemporalVertex& a, const TemporalVertex& b) {
        return a.time != b.time ? a.time < b.time : a.series < b.series;
    });

    std::vector<char> seen(g.size(), 0);
    std::deque<SeriesIdx> queue;
    for (const auto& x : order) {
        if (seen[static_cast<std::size_t>(x.series)]) continue;  // all its descendants are already seen
        queue.clear();
        queue.push_back(x.series);
        while (!queue.empty()) {
            SeriesIdx u = queue.front();
            queue.pop_front();
            if (stats) ++stats->expansions[static_cast<std::size_t>(u)];
            for (SeriesIdx d : g.children(u)) {
                if (seen[static_cast<std::size_t>(d)]) continue;
                seen[static_cast<std::size_t>(d)] = 1;
                TemporalVertex at{d, x.time};
                p.set_threshold(d, p.is_intervention(at) ? ExtTime(p.release_time(at)) : ExtTime(x.time));
                queue.push_back(d);
            }
        }
    }
    return p;
}

bool in_cd(const NcProfile& p, const TemporalVertex& v) { return p.in_cd(v); }
bool in_nc(const NcProfile& p, const TemporalVertex& v) { return p.in_nc(v); }

}  // namespace tsibc
