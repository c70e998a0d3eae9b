#include "tsibc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <unordered_set>

#include "tsibc/errors.hpp"

namespace tsibc {

namespace {

struct Arc {
    int other;
    int lag;
    SeriesIdx a;  // tail series
    SeriesIdx b;  // head series
};

// Every arrow any candidate of the spec may contain.
struct Space {
    int n = 0;
    int count = 0;
    std::int64_t lo = 0;
    std::vector<std::vector<Arc>> out;
    std::vector<std::vector<Arc>> in;

    explicit Space(const EnumSpec& spec) {
        n = static_cast<int>(spec.scg.size());
        lo = spec.window.lo;
        count = n * static_cast<int>(spec.window.length());
        out.assign(static_cast<std::size_t>(count), {});
        in.assign(static_cast<std::size_t>(count), {});
        for (int v = 0; v < count; ++v) {
            SeriesIdx b = v % n;
            std::int64_t t2 = lo + v / n;
            for (SeriesIdx a : spec.scg.parents(b)) {
                for (int lag = (a == b ? 1 : 0); lag <= spec.max_lag; ++lag) {
                    std::int64_t t1 = t2 - lag;
                    if (t1 < lo) break;
                    int u = static_cast<int>((t1 - lo) * n + a);
                    out[static_cast<std::size_t>(u)].push_back({v, lag, a, b});
                    in[static_cast<std::size_t>(v)].push_back({u, lag, a, b});
                }
            }
        }
        auto by_other = [](const Arc& x, const Arc& y) { return x.other < y.other; };
        for (auto& o : out) std::sort(o.begin(), o.end(), by_other);
        for (auto& i : in) std::sort(i.begin(), i.end(), by_other);
    }
};

// Series-level instantaneous arrows used so far, as a bitmask over n*n pairs.
bool inst_reaches(std::uint64_t mask, int n, int from, int to) {
    std::uint64_t seen = std::uint64_t{1} << from;
    std::vector<int> stack{from};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == to) return true;
        for (int w = 0; w < n; ++w) {
            if ((mask >> (u * n + w) & 1u) && !(seen >> w & 1u)) {
                seen |= std::uint64_t{1} << w;
                stack.push_back(w);
            }
        }
    }
    return false;
}

// Returns false if adding the arc would close an instantaneous cycle.
bool add_inst(std::uint64_t& mask, int n, const Arc& arc) {
    if (arc.lag != 0) return true;
    std::uint64_t bit = std::uint64_t{1} << (arc.a * n + arc.b);
    if (mask & bit) return true;
    if (inst_reaches(mask, n, arc.b, arc.a)) return false;
    mask |= bit;
    return true;
}

void require_small(const EnumSpec& spec) {
    if (spec.consistency && spec.scg.size() > 8)
        throw Error("path-space oracle with consistency supports at most 8 series");
}

std::vector<char> intervention_mask(const EnumSpec& spec, const CausalQuery& q) {
    std::vector<char> m(spec.scg.size() * static_cast<std::size_t>(spec.window.length()), 0);
    for (const auto& x : q.interventions) m[static_cast<std::size_t>(window_id(spec, x))] = 1;
    return m;
}

struct PairHash {
    std::size_t operator()(const std::pair<int, std::uint64_t>& p) const {
        return std::hash<std::uint64_t>()(p.second * 1315423911u + static_cast<std::uint64_t>(p.first));
    }
};

// Forward (or reverse) reachability from `start` over vertices passing
// `ok`, honouring the consistency constraint. Marks reached vertices.
void reach(const EnumSpec& spec, const Space& s, int start, bool forward, const std::vector<char>& ok,
           std::vector<char>& mark, std::uint64_t& explored) {
    const auto& adj = forward ? s.out : s.in;
    if (!spec.consistency) {
        std::vector<char> seen(static_cast<std::size_t>(s.count), 0);
        std::deque<int> queue{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            ++explored;
            for (const auto& arc : adj[static_cast<std::size_t>(u)]) {
                auto w = static_cast<std::size_t>(arc.other);
                if (seen[w] || !ok[w]) continue;
                seen[w] = 1;
                mark[w] = 1;
                queue.push_back(arc.other);
            }
        }
        return;
    }
    std::unordered_set<std::pair<int, std::uint64_t>, PairHash> seen;
    std::vector<std::pair<int, std::uint64_t>> stack{{start, 0}};
    seen.insert(stack.front());
    while (!stack.empty()) {
        auto [u, mask] = stack.back();
        stack.pop_back();
        if (++explored > spec.budget) throw BudgetExceeded(spec.budget);
        for (const auto& arc : adj[static_cast<std::size_t>(u)]) {
            auto w = static_cast<std::size_t>(arc.other);
            if (!ok[w] || arc.other == start) continue;
            std::uint64_t m = mask;
            if (!add_inst(m, s.n, arc)) continue;
            mark[w] = 1;
            if (seen.insert({arc.other, m}).second) stack.push_back({arc.other, m});
        }
    }
}

class WitnessDfs {
public:
    WitnessDfs(const EnumSpec& spec, const Space& s, int x, int y, std::vector<char> allowed, int fork)
        : spec_(spec), s_(s), x_(x), y_(y), fork_(fork), allowed_(std::move(allowed)),
          visited_(static_cast<std::size_t>(s.count), 0) {
        // fwd_ok: reaches y forward inside allowed.
        fwd_ok_.assign(static_cast<std::size_t>(s.count), 0);
        std::deque<int> queue;
        if (allowed_[static_cast<std::size_t>(y)]) {
            fwd_ok_[static_cast<std::size_t>(y)] = 1;
            queue.push_back(y);
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& arc : s.in[static_cast<std::size_t>(u)]) {
                auto w = static_cast<std::size_t>(arc.other);
                if (fwd_ok_[w] || !allowed_[w]) continue;
                fwd_ok_[w] = 1;
                queue.push_back(arc.other);
            }
        }
        // back_ok: has an ancestor (itself included) with fwd_ok.
        back_ok_ = fwd_ok_;
        for (int v = 0; v < s.count; ++v)
            if (back_ok_[static_cast<std::size_t>(v)]) queue.push_back(v);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& arc : s.out[static_cast<std::size_t>(u)]) {
                auto w = static_cast<std::size_t>(arc.other);
                if (back_ok_[w] || !allowed_[w]) continue;
                back_ok_[w] = 1;
                queue.push_back(arc.other);
            }
        }
    }

    // Depth limit counts arrows; returns true and fills path on success.
    bool run(int limit) {
        limit_ = limit;
        path_.assign(1, x_);
        arrows_.clear();
        std::fill(visited_.begin(), visited_.end(), 0);
        visited_[static_cast<std::size_t>(x_)] = 1;
        return backward(x_, 0);
    }

    const std::vector<int>& path() const { return path_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::uint64_t explored() const { return explored_; }

private:
    void tick() {
        if (++explored_ > spec_.budget) throw BudgetExceeded(spec_.budget);
    }

    void push(int w, Arrow a) {
        visited_[static_cast<std::size_t>(w)] = 1;
        path_.push_back(w);
        arrows_.push_back(a);
    }
    void pop() {
        visited_[static_cast<std::size_t>(path_.back())] = 0;
        path_.pop_back();
        arrows_.pop_back();
    }

    bool backward(int u, int depth) {
        tick();
        if (depth >= limit_) return false;
        for (const auto& arc : s_.in[static_cast<std::size_t>(u)]) {
            int w = arc.other;
            auto wi = static_cast<std::size_t>(w);
            if (!allowed_[wi] || visited_[wi] || !back_ok_[wi]) continue;
            std::uint64_t saved = mask_;
            if (spec_.consistency && !add_inst(mask_, s_.n, arc)) continue;
            push(w, Arrow::Backward);
            if (w == y_) {
                if (fork_ < 0 || fork_ == y_) return true;
            } else {
                if ((fork_ < 0 || fork_ == w) && forward(w, depth + 1)) return true;
                if ((fork_ < 0 || fork_ != w) && backward(w, depth + 1)) return true;
            }
            pop();
            mask_ = saved;
        }
        return false;
    }

    bool forward(int u, int depth) {
        tick();
        if (depth >= limit_ || !reaches_y(u)) return false;
        for (const auto& arc : s_.out[static_cast<std::size_t>(u)]) {
            int w = arc.other;
            auto wi = static_cast<std::size_t>(w);
            if (!allowed_[wi] || visited_[wi] || !fwd_ok_[wi]) continue;
            std::uint64_t saved = mask_;
            if (spec_.consistency && !add_inst(mask_, s_.n, arc)) continue;
            push(w, Arrow::Forward);
            if (w == y_ || forward(w, depth + 1)) return true;
            pop();
            mask_ = saved;
        }
        return false;
    }

    bool reaches_y(int from) {
        std::vector<char> seen = visited_;
        std::deque<int> queue{from};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& arc : s_.out[static_cast<std::size_t>(u)]) {
                auto w = static_cast<std::size_t>(arc.other);
                if (arc.other == y_) return true;
                if (seen[w] || !allowed_[w]) continue;
                seen[w] = 1;
                queue.push_back(arc.other);
            }
        }
        return false;
    }

    const EnumSpec& spec_;
    const Space& s_;
    int x_;
    int y_;
    int fork_;
    int limit_ = std::numeric_limits<int>::max();
    std::vector<char> allowed_;
    std::vector<char> visited_;
    std::vector<char> fwd_ok_;
    std::vector<char> back_ok_;
    std::vector<int> path_;
    std::vector<Arrow> arrows_;
    std::uint64_t mask_ = 0;
    std::uint64_t explored_ = 0;
};

// Collider-free backdoor path search inside an explicit FTCG.
bool explicit_witness(const Ftcg& f, int x, int y, const std::vector<char>& allowed, std::vector<int>& path,
                      std::vector<Arrow>& arrows) {
    std::vector<char> visited(f.vertex_count(), 0);
    visited[static_cast<std::size_t>(x)] = 1;
    path.assign(1, x);
    arrows.clear();
    std::function<bool(int, bool)> step = [&](int u, bool fwd) {
        if (!fwd) {
            for (int w : f.in(u)) {
                auto wi = static_cast<std::size_t>(w);
                if (!allowed[wi] || visited[wi]) continue;
                visited[wi] = 1;
                path.push_back(w);
                arrows.push_back(Arrow::Backward);
                if (w == y || step(w, false) || step(w, true)) return true;
                visited[wi] = 0;
                path.pop_back();
                arrows.pop_back();
            }
            return false;
        }
        for (int w : f.out(u)) {
            auto wi = static_cast<std::size_t>(w);
            if (!allowed[wi] || visited[wi]) continue;
            visited[wi] = 1;
            path.push_back(w);
            arrows.push_back(Arrow::Forward);
            if (w == y || step(w, true)) return true;
            visited[wi] = 0;
            path.pop_back();
            arrows.pop_back();
        }
        return false;
    };
    return step(x, false);
}

Ftcg cut_others(const Ftcg& f, const CausalQuery& q, std::size_t keep) {
    std::set<TemporalVertex> others;
    for (std::size_t j = 0; j < q.interventions.size(); ++j)
        if (j != keep) others.insert(q.interventions[j]);
    return mutilate(f, others, others);
}

PathF to_path(const EnumSpec& spec, const std::vector<int>& ids, const std::vector<Arrow>& arrows) {
    PathF p;
    for (int id : ids) p.vertices.push_back(window_vertex(spec, id));
    p.arrows = arrows;
    return p;
}

}  // namespace

void EnumSpec::validate() const {
    if (window.hi < window.lo) throw Error("empty window");
    if (max_lag < 0) throw Error("max_lag must be non-negative");
    if (budget == 0) throw Error("budget must be positive");
    bool self_loop = false;
    for (std::size_t v = 0; v < scg.size(); ++v)
        if (scg.has_edge(static_cast<SeriesIdx>(v), static_cast<SeriesIdx>(v))) self_loop = true;
    if (self_loop && max_lag < 1) throw Error("self-loops need max_lag >= 1");
    if (window.hi - window.lo < max_lag) throw Error("window shorter than max_lag");
}

EnumSpec default_enum_spec(const Scg& g, const CausalQuery& q, bool consistency) {
    EnumSpec s;
    s.scg = g;
    std::int64_t gamma = q.max_gamma();
    s.window = {-(gamma + 2), 0};
    s.max_lag = static_cast<int>(gamma + 1);
    s.consistency = consistency;
    return s;
}

int window_id(const EnumSpec& spec, const TemporalVertex& v) {
    if (!spec.window.contains(v.time) || v.series < 0 || static_cast<std::size_t>(v.series) >= spec.scg.size())
        throw OutOfWindow(to_string(spec.scg, v) + " outside the oracle window");
    return static_cast<int>((v.time - spec.window.lo) * static_cast<std::int64_t>(spec.scg.size()) + v.series);
}

TemporalVertex window_vertex(const EnumSpec& spec, int id) {
    auto n = static_cast<int>(spec.scg.size());
    return {static_cast<SeriesIdx>(id % n), spec.window.lo + id / n};
}

Scg reduce(const Ftcg& f) {
    std::set<std::pair<std::string, std::string>> edges;
    const auto& names = f.series_names();
    for (const auto& [a, b] : f.edges())
        edges.insert({names[static_cast<std::size_t>(a.series)], names[static_cast<std::size_t>(b.series)]});
    return Scg(names, std::vector<std::pair<std::string, std::string>>(edges.begin(), edges.end()));
}

std::uint64_t enumerate_candidates(const EnumSpec& spec, const std::function<bool(const Ftcg&)>& visit) {
    spec.validate();
    Space s(spec);
    auto names = series_names_of(spec.scg);
    // Each slot is a set of arrows switched on together: single arrows, or a
    // whole translation class under consistency.
    std::map<std::tuple<SeriesIdx, SeriesIdx, int>, std::vector<std::pair<int, int>>> patterns;
    std::vector<std::vector<std::pair<int, int>>> slots;
    std::vector<std::pair<SeriesIdx, SeriesIdx>> slot_edge;
    std::vector<std::pair<TemporalVertex, TemporalVertex>> singles;
    for (int u = 0; u < s.count; ++u)
        for (const auto& arc : s.out[static_cast<std::size_t>(u)]) {
            if (spec.consistency)
                patterns[{arc.a, arc.b, arc.lag}].push_back({u, arc.other});
            else
                singles.push_back({window_vertex(spec, u), window_vertex(spec, arc.other)});
        }
    if (spec.consistency) {
        for (auto& [key, arrows] : patterns) {
            slots.push_back(arrows);
            slot_edge.push_back({std::get<0>(key), std::get<1>(key)});
        }
    } else {
        std::sort(singles.begin(), singles.end());
        for (const auto& [a, b] : singles) {
            slots.push_back({{window_id(spec, a), window_id(spec, b)}});
            slot_edge.push_back({a.series, b.series});
        }
    }
    std::size_t k = slots.size();
    if (k >= 63 || (std::uint64_t{1} << k) > spec.budget) throw BudgetExceeded(spec.budget);

    auto scg_edges = spec.scg.edges();
    std::uint64_t visited = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Ftcg f(names, spec.window);
        std::set<std::pair<SeriesIdx, SeriesIdx>> realized;
        for (std::size_t j = 0; j < k; ++j) {
            if (!(mask >> j & 1u)) continue;
            for (auto [u, v] : slots[j]) f.add_edge(window_vertex(spec, u), window_vertex(spec, v));
            realized.insert(slot_edge[j]);
        }
        if (spec.relaxation == Relaxation::ExactReduction && realized.size() != scg_edges.size()) continue;
        if (!f.is_acyclic()) continue;
        ++visited;
        if (!visit(f)) break;
    }
    return visited;
}

bool d_separated(const Ftcg& f, const TemporalVertex& a, const TemporalVertex& b,
                 const std::set<TemporalVertex>& z) {
    int ia = f.id(a);
    int ib = f.id(b);
    std::vector<char> in_z(f.vertex_count(), 0);
    for (const auto& v : z) in_z[static_cast<std::size_t>(f.id(v))] = 1;
    if (ia == ib) return false;
    if (in_z[static_cast<std::size_t>(ia)] || in_z[static_cast<std::size_t>(ib)]) return true;

    // Vertices with a descendant (itself included) in z.
    std::vector<char> anc_z(f.vertex_count(), 0);
    std::deque<int> queue;
    for (std::size_t v = 0; v < in_z.size(); ++v)
        if (in_z[v]) {
            anc_z[v] = 1;
            queue.push_back(static_cast<int>(v));
        }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int p : f.in(u))
            if (!anc_z[static_cast<std::size_t>(p)]) {
                anc_z[static_cast<std::size_t>(p)] = 1;
                queue.push_back(p);
            }
    }

    // Reachability over (vertex, arrived-from-child) states.
    std::vector<char> seen_up(f.vertex_count(), 0), seen_down(f.vertex_count(), 0);
    std::deque<std::pair<int, bool>> states{{ia, true}};
    seen_up[static_cast<std::size_t>(ia)] = 1;
    auto go = [&](int v, bool up) {
        auto& seen = up ? seen_up : seen_down;
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            states.push_back({v, up});
        }
    };
    while (!states.empty()) {
        auto [v, up] = states.front();
        states.pop_front();
        auto vi = static_cast<std::size_t>(v);
        if (v == ib) return false;
        if (up) {
            if (in_z[vi]) continue;
            for (int p : f.in(v)) go(p, true);
            for (int c : f.out(v)) go(c, false);
        } else {
            if (!in_z[vi])
                for (int c : f.out(v)) go(c, false);
            if (anc_z[vi])
                for (int p : f.in(v)) go(p, true);
        }
    }
    return true;
}

bool backdoor_criterion(const Ftcg& f, const std::set<TemporalVertex>& xs, const std::set<TemporalVertex>& ys,
                        const std::set<TemporalVertex>& z) {
    for (const auto& v : xs)
        if (ys.count(v) || z.count(v)) throw OverlapError("intervention overlaps effects or adjustment set");
    for (const auto& v : ys)
        if (z.count(v)) throw OverlapError("effect overlaps adjustment set");
    std::vector<int> sources;
    for (const auto& x : xs) sources.push_back(f.id(x));
    auto desc = f.descendants(sources);
    for (const auto& v : z)
        if (desc[static_cast<std::size_t>(f.id(v))]) return false;
    // Removing every intervention's outgoing edges leaves exactly the
    // backdoor paths of each X^i in the graph cut at the other X^i'.
    Ftcg h = mutilate(f, {}, xs);
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (!d_separated(h, x, y, z)) return false;
    return true;
}

Ftcg certificate_for(const EnumSpec& spec, const PathF& path) {
    Ftcg f(series_names_of(spec.scg), spec.window);
    for (std::size_t k = 0; k < path.arrows.size(); ++k) {
        TemporalVertex a = path.vertices[k], b = path.vertices[k + 1];
        if (path.arrows[k] == Arrow::Backward) std::swap(a, b);
        if (!spec.consistency) {
            f.add_edge(a, b);
            continue;
        }
        std::int64_t lag = b.time - a.time;
        for (std::int64_t t = spec.window.lo + lag; t <= spec.window.hi; ++t)
            f.add_edge({a.series, t - lag}, {b.series, t});
    }
    f.validate();
    return f;
}

OracleVerdict witness_search(const EnumSpec& spec, const CausalQuery& q, const Region& region,
                             const WitnessConstraint& c) {
    spec.validate();
    if (spec.relaxation != Relaxation::SubgraphReduction) return witness_search_enumerated(spec, q, region);
    require_small(spec);
    if (q.effects.size() != 1) throw InvalidQuery("witness search expects a single effect");
    Space s(spec);
    auto inter = intervention_mask(spec, q);
    int y = window_id(spec, q.effects.front());
    int fork = c.fork ? window_id(spec, *c.fork) : -1;
    OracleVerdict verdict;
    for (std::size_t i = 0; i < q.interventions.size(); ++i) {
        if (c.intervention && q.interventions[i] != *c.intervention) continue;
        int x = window_id(spec, q.interventions[i]);
        std::vector<char> allowed(static_cast<std::size_t>(s.count), 0);
        for (int v = 0; v < s.count; ++v)
            allowed[static_cast<std::size_t>(v)] = (v == x || !inter[static_cast<std::size_t>(v)]) &&
                                                   region(window_vertex(spec, v));
        if (!allowed[static_cast<std::size_t>(y)]) continue;
        WitnessDfs dfs(spec, s, x, y, allowed, fork);
        bool found = dfs.run(std::numeric_limits<int>::max());
        verdict.explored += dfs.explored();
        if (!found) continue;
        if (c.shortest) {
            int best = static_cast<int>(dfs.arrows().size());
            for (int limit = 1; limit <= best; ++limit) {
                WitnessDfs d2(spec, s, x, y, allowed, fork);
                bool ok = d2.run(limit);
                verdict.explored += d2.explored();
                if (ok) {
                    verdict.witness = to_path(spec, d2.path(), d2.arrows());
                    break;
                }
            }
        } else {
            verdict.witness = to_path(spec, dfs.path(), dfs.arrows());
        }
        verdict.exists_witness = true;
        verdict.ftcg = certificate_for(spec, *verdict.witness);
        return verdict;
    }
    return verdict;
}

OracleVerdict witness_search_enumerated(const EnumSpec& spec, const CausalQuery& q, const Region& region) {
    if (q.effects.size() != 1) throw InvalidQuery("witness search expects a single effect");
    std::vector<char> allowed_base(spec.scg.size() * static_cast<std::size_t>(spec.window.length()), 0);
    for (std::size_t v = 0; v < allowed_base.size(); ++v)
        allowed_base[v] = region(window_vertex(spec, static_cast<int>(v)));
    auto inter = intervention_mask(spec, q);
    int y = window_id(spec, q.effects.front());
    OracleVerdict verdict;
    verdict.explored = enumerate_candidates(spec, [&](const Ftcg& f) {
        for (std::size_t i = 0; i < q.interventions.size(); ++i) {
            int x = window_id(spec, q.interventions[i]);
            std::vector<char> allowed = allowed_base;
            for (std::size_t v = 0; v < allowed.size(); ++v)
                if (inter[v] && static_cast<int>(v) != x) allowed[v] = 0;
            if (!allowed[static_cast<std::size_t>(y)]) continue;
            Ftcg g = cut_others(f, q, i);
            std::vector<int> path;
            std::vector<Arrow> arrows;
            if (explicit_witness(g, x, y, allowed, path, arrows)) {
                verdict.exists_witness = true;
                verdict.witness = to_path(spec, path, arrows);
                verdict.ftcg = f;
                return false;
            }
        }
        return true;
    });
    return verdict;
}

std::vector<char> oracle_cd(const EnumSpec& spec, const CausalQuery& q) {
    spec.validate();
    require_small(spec);
    Space s(spec);
    auto inter = intervention_mask(spec, q);
    std::vector<char> cd = inter;
    std::uint64_t explored = 0;
    for (const auto& xv : q.interventions) {
        int x = window_id(spec, xv);
        std::vector<char> ok(static_cast<std::size_t>(s.count), 1);
        for (std::size_t v = 0; v < ok.size(); ++v)
            if (inter[v]) ok[v] = 0;
        reach(spec, s, x, true, ok, cd, explored);
    }
    return cd;
}

std::vector<char> oracle_cd_enumerated(const EnumSpec& spec, const CausalQuery& q) {
    auto cd = intervention_mask(spec, q);
    enumerate_candidates(spec, [&](const Ftcg& f) {
        for (std::size_t i = 0; i < q.interventions.size(); ++i) {
            Ftcg g = cut_others(f, q, i);
            auto d = g.descendants({g.id(q.interventions[i])});
            for (std::size_t v = 0; v < d.size(); ++v) cd[v] |= d[v];
        }
        return true;
    });
    return cd;
}

std::vector<char> oracle_accessible(const EnumSpec& spec, const std::vector<char>& nc, const TemporalVertex& anchor) {
    spec.validate();
    require_small(spec);
    Space s(spec);
    int a = window_id(spec, anchor);
    std::vector<char> ok = nc;
    ok[static_cast<std::size_t>(a)] = 0;
    std::vector<char> acc(static_cast<std::size_t>(s.count), 0);
    std::uint64_t explored = 0;
    reach(spec, s, a, false, ok, acc, explored);
    return acc;
}

std::vector<char> oracle_accessible_enumerated(const EnumSpec& spec, const std::vector<char>& nc,
                                               const TemporalVertex& anchor) {
    std::vector<char> acc(nc.size(), 0);
    enumerate_candidates(spec, [&](const Ftcg& f) {
        int a = f.id(anchor);
        std::vector<char> seen(nc.size(), 0);
        std::deque<int> queue{a};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int p : f.in(u)) {
                auto pi = static_cast<std::size_t>(p);
                if (seen[pi] || !nc[pi] || p == a) continue;
                seen[pi] = acc[pi] = 1;
                queue.push_back(p);
            }
        }
        return true;
    });
    return acc;
}

}  // namespace tsibc
