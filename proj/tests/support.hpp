// Test-side helpers and brute-force oracles. Nothing here calls the code
// under test beyond graph construction.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tsibc/ftcg.hpp"
#include "tsibc/query.hpp"
#include "tsibc/scg.hpp"

namespace support {

using tsibc::Scg;
using tsibc::SeriesIdx;
using tsibc::TemporalVertex;

inline Scg edgelist(const std::string& text) { return tsibc::parse_scg(text, tsibc::GraphFormat::Edgelist); }

inline TemporalVertex tv(const Scg& g, const std::string& s, std::int64_t t) { return {g.index(s), t}; }

// Plain DAG over window vertices with ids (t - lo) * n + s.
struct Dag {
    int n = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::vector<std::set<int>> out;
    std::vector<std::set<int>> in;

    Dag(int series, std::int64_t lo_, std::int64_t hi_) : n(series), lo(lo_), hi(hi_) {
        auto count = static_cast<std::size_t>(n * (hi - lo + 1));
        out.resize(count);
        in.resize(count);
    }
    int id(SeriesIdx s, std::int64_t t) const { return static_cast<int>((t - lo) * n + s); }
    TemporalVertex vertex(int id) const { return {static_cast<SeriesIdx>(id % n), lo + id / n}; }
    int size() const { return static_cast<int>(out.size()); }
    void add(int a, int b) {
        out[static_cast<std::size_t>(a)].insert(b);
        in[static_cast<std::size_t>(b)].insert(a);
    }
    void cut(int v, bool incoming, bool outgoing) {
        auto vi = static_cast<std::size_t>(v);
        if (incoming) {
            for (int p : in[vi]) out[static_cast<std::size_t>(p)].erase(v);
            in[vi].clear();
        }
        if (outgoing) {
            for (int c : out[vi]) in[static_cast<std::size_t>(c)].erase(v);
            out[vi].clear();
        }
    }
    bool acyclic() const {
        std::vector<int> state(out.size(), 0);
        std::function<bool(int)> dfs = [&](int u) {
            state[static_cast<std::size_t>(u)] = 1;
            for (int w : out[static_cast<std::size_t>(u)]) {
                int s = state[static_cast<std::size_t>(w)];
                if (s == 1 || (s == 0 && !dfs(w))) return false;
            }
            state[static_cast<std::size_t>(u)] = 2;
            return true;
        };
        for (int u = 0; u < size(); ++u)
            if (state[static_cast<std::size_t>(u)] == 0 && !dfs(u)) return false;
        return true;
    }
    std::set<int> descendants(int v) const {
        std::set<int> seen{v};
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : out[static_cast<std::size_t>(u)])
                if (seen.insert(w).second) stack.push_back(w);
        }
        return seen;
    }
};

// Every DAG over the window whose arrows realize SCG edges with lag <= max_lag
// (self-loops lagged), translation-invariant when `consistency` is set.
inline std::vector<Dag> all_candidates(const Scg& g, std::int64_t lo, std::int64_t hi, int max_lag, bool consistency) {
    int n = static_cast<int>(g.size());
    std::vector<std::vector<std::pair<int, int>>> slots;
    std::map<std::tuple<int, int, int>, std::size_t> pattern_slot;
    Dag shape(n, lo, hi);
    for (auto [a, b] : g.edges())
        for (int lag = (a == b ? 1 : 0); lag <= max_lag; ++lag)
            for (std::int64_t t = lo + lag; t <= hi; ++t) {
                std::pair<int, int> arrow{shape.id(a, t - lag), shape.id(b, t)};
                if (!consistency) {
                    slots.push_back({arrow});
                    continue;
                }
                auto key = std::make_tuple(a, b, lag);
                auto it = pattern_slot.find(key);
                if (it == pattern_slot.end()) {
                    pattern_slot[key] = slots.size();
                    slots.push_back({arrow});
                } else {
                    slots[it->second].push_back(arrow);
                }
            }
    std::vector<Dag> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Dag d(n, lo, hi);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1u)
                for (auto [u, v] : slots[k]) d.add(u, v);
        if (d.acyclic()) out.push_back(std::move(d));
    }
    return out;
}

// All simple paths a .. b, each as (vertices, forward flags).
struct RawPath {
    std::vector<int> v;
    std::vector<bool> forward;  // arrow between v[k] and v[k+1] points to v[k+1]
};

inline void simple_paths(const Dag& d, int a, int b, const std::function<bool(int)>& allowed,
                         const std::function<void(const RawPath&)>& visit) {
    RawPath p;
    p.v.push_back(a);
    std::vector<char> on(static_cast<std::size_t>(d.size()), 0);
    on[static_cast<std::size_t>(a)] = 1;
    std::function<void(int)> go = [&](int u) {
        if (u == b) {
            visit(p);
            return;
        }
        auto step = [&](int w, bool fwd) {
            if (on[static_cast<std::size_t>(w)] || !allowed(w)) return;
            on[static_cast<std::size_t>(w)] = 1;
            p.v.push_back(w);
            p.forward.push_back(fwd);
            go(w);
            p.v.pop_back();
            p.forward.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
        };
        for (int w : d.out[static_cast<std::size_t>(u)]) step(w, true);
        for (int w : d.in[static_cast<std::size_t>(u)]) step(w, false);
    };
    go(a);
}

// d-separation by checking every simple path for blocking.
inline bool dsep_by_paths(const Dag& d, int a, int b, const std::set<int>& z) {
    if (a == b) return false;
    if (z.count(a) || z.count(b)) return true;
    std::set<int> z_anc;  // z and its ancestors
    for (int v : z) {
        std::vector<int> stack{v};
        z_anc.insert(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int p : d.in[static_cast<std::size_t>(u)])
                if (z_anc.insert(p).second) stack.push_back(p);
        }
    }
    bool open_path = false;
    simple_paths(d, a, b, [](int) { return true; }, [&](const RawPath& p) {
        for (std::size_t k = 1; k + 1 < p.v.size(); ++k) {
            bool collider = p.forward[k - 1] && !p.forward[k];
            int m = p.v[k];
            if (collider ? !z_anc.count(m) : z.count(m)) return;
        }
        open_path = true;
    });
    return !open_path;
}

// Collider-free backdoor path from a to b inside `allowed`.
inline bool has_cf_backdoor(const Dag& d, int a, int b, const std::function<bool(int)>& allowed) {
    bool found = false;
    simple_paths(d, a, b, allowed, [&](const RawPath& p) {
        if (p.forward.empty() || p.forward.front()) return;
        for (std::size_t k = 1; k < p.forward.size(); ++k)
            if (p.forward[k - 1] && !p.forward[k]) return;
        found = true;
    });
    return found;
}

// Union of descendants of each intervention, other interventions cut.
inline std::vector<char> brute_cd(const std::vector<Dag>& cands, const tsibc::CausalQuery& q, std::size_t size) {
    std::vector<char> cd(size, 0);
    for (const Dag& base : cands)
        for (std::size_t i = 0; i < q.interventions.size(); ++i) {
            Dag d = base;
            for (std::size_t j = 0; j < q.interventions.size(); ++j) {
                int v = d.id(q.interventions[j].series, q.interventions[j].time);
                cd[static_cast<std::size_t>(v)] = 1;
                if (j != i) d.cut(v, true, true);
            }
            for (int v : d.descendants(d.id(q.interventions[i].series, q.interventions[i].time)))
                cd[static_cast<std::size_t>(v)] = 1;
        }
    return cd;
}

// Some candidate has a collider-free backdoor path from an intervention to
// the effect avoiding the other interventions (and outside `region` if given).
inline bool brute_witness(const std::vector<Dag>& cands, const tsibc::CausalQuery& q,
                          const std::vector<char>* region = nullptr) {
    for (const Dag& base : cands)
        for (std::size_t i = 0; i < q.interventions.size(); ++i) {
            Dag d = base;
            std::set<int> others;
            for (std::size_t j = 0; j < q.interventions.size(); ++j)
                if (j != i) others.insert(d.id(q.interventions[j].series, q.interventions[j].time));
            for (int o : others) d.cut(o, true, true);
            int x = d.id(q.interventions[i].series, q.interventions[i].time);
            int y = d.id(q.effects[0].series, q.effects[0].time);
            auto ok = [&](int v) { return !others.count(v) && (!region || (*region)[static_cast<std::size_t>(v)]); };
            if (has_cf_backdoor(d, x, y, ok)) return true;
        }
    return false;
}

// Number of arrow patterns a consistent enumeration would range over.
inline std::size_t pattern_count(const Scg& g, int max_lag) {
    std::size_t n = 0;
    for (auto [a, b] : g.edges()) n += static_cast<std::size_t>(max_lag + (a == b ? 0 : 1));
    return n;
}

}  // namespace support
