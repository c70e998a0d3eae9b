#include "tsibc/accessibility.hpp"

#include <queue>
#include <tuple>

#include "tsibc/errors.hpp"

namespace tsibc {

namespace {

struct Entry {
    std::int64_t time;
    SeriesIdx series;
};

struct EntryOrder {
    // Max time first; equal times pop the smaller series id first.
    bool operator()(const Entry& a, const Entry& b) const {
        return a.time != b.time ? a.time < b.time : a.series > b.series;
    }
};

AccessibilityProfile run(const Scg& g, const NcProfile& p, std::vector<TemporalVertex> anchors,
                         const std::optional<ForbiddenArrow>& forbidden, const Lag0Filter& lag0_forbidden = {}) {
    AccessibilityProfile a;
    a.anchors = std::move(anchors);
    a.forbidden = forbidden;
    a.ceilings.assign(g.size(), ExtTime::neg_inf());
    a.via.assign(g.size(), AccessibilityProfile::kAnchor);
    a.origin.assign(g.size(), -1);
    for (const auto& v : a.anchors)
        if (v.series < 0 || static_cast<std::size_t>(v.series) >= g.size())
            throw UnknownVertex("#" + std::to_string(v.series));

    // Only a single anchor can itself lie in NC, so only then is it excluded.
    std::optional<TemporalVertex> excluded;
    if (a.anchors.size() == 1) excluded = a.anchors.front();

    std::priority_queue<Entry, std::vector<Entry>, EntryOrder> heap;
    std::vector<char> done(g.size(), 0);

    auto relax = [&](SeriesIdx parent, SeriesIdx child, std::int64_t child_time, SeriesIdx via, int origin) {
        std::int64_t bound = child_time;
        if ((forbidden && forbidden->from == parent && forbidden->to == child) ||
            (lag0_forbidden && lag0_forbidden(parent, child)))
            bound -= 1;
        ExtTime c = p.latest_nc_at_or_before(parent, ExtTime(bound), excluded);
        auto& cur = a.ceilings[static_cast<std::size_t>(parent)];
        if (c.finite() && c > cur) {
            cur = c;
            a.via[static_cast<std::size_t>(parent)] = via;
            a.origin[static_cast<std::size_t>(parent)] = origin;
            heap.push({c.value(), parent});
        }
    };

    for (std::size_t k = 0; k < a.anchors.size(); ++k) {
        const auto& v = a.anchors[k];
        for (SeriesIdx par : g.parents(v.series))
            relax(par, v.series, v.time, AccessibilityProfile::kAnchor, static_cast<int>(k));
    }
    while (!heap.empty()) {
        Entry e = heap.top();
        heap.pop();
        auto s = static_cast<std::size_t>(e.series);
        if (done[s] || ExtTime(e.time) != a.ceilings[s]) continue;
        done[s] = 1;
        for (SeriesIdx par : g.parents(e.series)) {
            if (done[static_cast<std::size_t>(par)]) continue;
            relax(par, e.series, e.time, e.series, a.origin[s]);
        }
    }
    return a;
}

}  // namespace

std::vector<TemporalVertex> AccessibilityProfile::route(const TemporalVertex& f) const {
    std::vector<TemporalVertex> out{f};
    SeriesIdx cur = f.series;
    int guard = static_cast<int>(ceilings.size()) + 2;
    while (guard-- > 0) {
        SeriesIdx next = via[static_cast<std::size_t>(cur)];
        if (next == kAnchor) {
            int o = origin[static_cast<std::size_t>(cur)];
            if (o >= 0) out.push_back(anchors[static_cast<std::size_t>(o)]);
            break;
        }
        out.push_back({next, ceilings[static_cast<std::size_t>(next)].value()});
        cur = next;
    }
    return out;
}

AccessibilityProfile compute_accessibility(const Scg& g, const NcProfile& p, const TemporalVertex& anchor,
                                           const std::optional<ForbiddenArrow>& forbidden) {
    return run(g, p, {anchor}, forbidden);
}

AccessibilityProfile compute_accessibility(const Scg& g, const NcProfile& p, const TemporalVertex& anchor,
                                           const Lag0Filter& lag0_forbidden) {
    return run(g, p, {anchor}, std::nullopt, lag0_forbidden);
}

AccessibilityProfile compute_accessibility_combined(const Scg& g, const NcProfile& p, const CausalQuery& q) {
    return compute_accessibility_multi(g, p, q.interventions);
}

AccessibilityProfile compute_accessibility_multi(const Scg& g, const NcProfile& p,
                                                 const std::vector<TemporalVertex>& anchors) {
    return run(g, p, anchors, std::nullopt);
}

bool is_nc_accessible(const NcProfile& p, const AccessibilityProfile& a, const TemporalVertex& f) {
    if (a.anchors.size() == 1 && f == a.anchors.front()) return false;
    ExtTime t(f.time);
    return p.threshold(f.series) <= t && t <= a.ceiling(f.series) && !p.is_intervention(f);
}

bool fork_exists_free(const NcProfile& p, const AccessibilityProfile& a_x, const AccessibilityProfile& a_y,
                      SeriesIdx f) {
    ExtTime t = p.threshold(f);
    return t.finite() && t <= a_x.ceiling(f) && t <= a_y.ceiling(f);
}

}  // namespace tsibc
