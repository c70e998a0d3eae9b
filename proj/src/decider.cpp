#include "tsibc/decider.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "tsibc/accessibility.hpp"
#include "tsibc/errors.hpp"

namespace tsibc {

namespace {

// Largest number of candidate series for the cut search of the
// instantaneous fork at the effect series.
constexpr std::size_t kMaxCutSeries = 20;

TemporalVertex shift(TemporalVertex v, std::int64_t d) { return {v.series, v.time + d}; }

void shift_witness(Witness& w, std::int64_t d) {
    w.intervention = shift(w.intervention, d);
    w.effect = shift(w.effect, d);
    if (w.fork) w.fork = shift(*w.fork, d);
    for (auto& v : w.sketch.vertices) v = shift(v, d);
}

// Sketch X <- ... <- F -> ... -> Y from two directed routes that both start at F.
PathF fork_sketch(const std::vector<TemporalVertex>& to_x, const std::vector<TemporalVertex>& to_y) {
    PathF p;
    for (auto it = to_x.rbegin(); it != to_x.rend(); ++it) {
        if (!p.vertices.empty()) p.arrows.push_back(Arrow::Backward);
        p.vertices.push_back(*it);
    }
    for (std::size_t k = 1; k < to_y.size(); ++k) {
        p.arrows.push_back(Arrow::Forward);
        p.vertices.push_back(to_y[k]);
    }
    return p;
}

Witness make_fork(const TemporalVertex& x, const TemporalVertex& y, const TemporalVertex& f, std::string rule,
                  const std::vector<TemporalVertex>& to_x, const std::vector<TemporalVertex>& to_y) {
    Witness w;
    w.kind = Witness::Kind::Fork;
    w.intervention = x;
    w.effect = y;
    w.fork = f;
    w.rule = std::move(rule);
    w.sketch = fork_sketch(to_x, to_y);
    return w;
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string value_name(const Scg& g, const TemporalVertex& v) {
    return lower(g.name(v.series)) + "_" + std::to_string(v.time);
}

AdjustmentSet empty_adjustment(std::size_t n, AdjustmentKind kind) {
    AdjustmentSet a;
    a.kind = kind;
    AdjustmentPart part;
    part.last.assign(n, ExtTime::neg_inf());
    a.parts.push_back(std::move(part));
    return a;
}

IbcVerdict decide_single(const Scg& g, const CausalQuery& q, bool consistency) {
    Preprocessed pre = preprocess(g, q);
    IbcVerdict v;
    v.consistency = consistency;
    v.pruned = pre.pruned;
    const CausalQuery& pq = pre.query;
    if (pq.interventions.empty()) {
        v.identifiable = true;
        v.adjustment = empty_adjustment(g.size(), AdjustmentKind::ComplementOfCd);
        return v;
    }
    NcProfile p = compute_t_nc(g, pq);
    std::optional<Witness> w = directed_no_fork_test(g, pq);
    if (!w) w = consistency ? fork_test_consistent(g, pq, p) : fork_test_free(g, pq, p);
    if (w) {
        v.identifiable = false;
        v.witness = std::move(w);
    } else {
        v.identifiable = true;
        v.adjustment = complement_of_cd(p);
    }
    return v;
}

}  // namespace

bool AdjustmentPart::contains(const TemporalVertex& v) const {
    if (v.series < 0 || static_cast<std::size_t>(v.series) >= last.size()) return false;
    return ExtTime(v.time) <= last[static_cast<std::size_t>(v.series)] && !exclusions.count(v);
}

bool AdjustmentPart::empty() const {
    return std::all_of(last.begin(), last.end(), [](ExtTime t) { return t.is_neg_inf(); });
}

bool AdjustmentSet::contains(const TemporalVertex& v) const {
    return std::any_of(parts.begin(), parts.end(), [&](const AdjustmentPart& p) { return p.contains(v); });
}

bool AdjustmentSet::empty() const {
    return std::all_of(parts.begin(), parts.end(), [](const AdjustmentPart& p) { return p.empty(); });
}

std::set<TemporalVertex> AdjustmentSet::materialize(std::size_t series_count, Window w) const {
    std::set<TemporalVertex> out;
    for (std::int64_t t = w.lo; t <= w.hi; ++t)
        for (std::size_t s = 0; s < series_count; ++s) {
            TemporalVertex v{static_cast<SeriesIdx>(s), t};
            if (contains(v)) out.insert(v);
        }
    return out;
}

Preprocessed preprocess(const Scg& g, const CausalQuery& q) {
    q.validate(g);
    if (q.effects.size() != 1) throw InvalidQuery("preprocess expects a single effect");
    Preprocessed out;
    out.offset = q.effects.front().time;
    CausalQuery n = q.shifted(-out.offset);
    SeriesIdx y = n.effects.front().series;
    // X reaches Y by a non-empty path iff X is a strict ancestor of Y.
    auto anc = ancestor_mask(g, y, true);
    out.query.effects = n.effects;
    for (const auto& x : n.interventions) {
        if (x.time > 0 || !anc[static_cast<std::size_t>(x.series)])
            out.pruned.push_back(x);
        else
            out.query.interventions.push_back(x);
    }
    return out;
}

std::optional<Witness> directed_no_fork_test(const Scg& g, const CausalQuery& q) {
    const TemporalVertex y = q.effects.front();
    std::vector<char> instant(g.size(), 0);
    bool any = false;
    for (const auto& x : q.interventions)
        if (x.time == y.time) instant[static_cast<std::size_t>(x.series)] = any = true;
    if (!any) return std::nullopt;

    std::vector<char> in_s(g.size(), 0);
    for (const auto& x : q.interventions) {
        auto d = descendant_mask(g, x.series, false);
        for (std::size_t i = 0; i < d.size(); ++i) in_s[i] |= d[i];
    }
    if (!in_s[static_cast<std::size_t>(y.series)]) return std::nullopt;

    std::vector<SeriesIdx> prev(g.size(), -1);
    std::vector<char> seen(g.size(), 0);
    std::deque<SeriesIdx> queue{y.series};
    seen[static_cast<std::size_t>(y.series)] = 1;
    while (!queue.empty()) {
        SeriesIdx u = queue.front();
        queue.pop_front();
        for (SeriesIdx c : g.children(u)) {
            auto ci = static_cast<std::size_t>(c);
            if (seen[ci] || !in_s[ci]) continue;
            seen[ci] = 1;
            prev[ci] = u;
            if (instant[ci]) {
                Witness w;
                w.kind = Witness::Kind::DirectedNoFork;
                w.intervention = {c, y.time};
                w.effect = y;
                w.rule = "directed";
                for (SeriesIdx s = c; s != -1; s = (s == y.series ? -1 : prev[static_cast<std::size_t>(s)])) {
                    if (!w.sketch.vertices.empty()) w.sketch.arrows.push_back(Arrow::Backward);
                    w.sketch.vertices.push_back({s, y.time});
                }
                return w;
            }
            queue.push_back(c);
        }
    }
    return std::nullopt;
}

std::optional<Witness> fork_test_free(const Scg& g, const CausalQuery& q, const NcProfile& p) {
    const TemporalVertex y = q.effects.front();
    auto ay = compute_accessibility(g, p, y);
    auto am = compute_accessibility_combined(g, p, q);
    for (SeriesIdx f = 0; f < static_cast<SeriesIdx>(g.size()); ++f) {
        if (!fork_exists_free(p, am, ay, f)) continue;
        TemporalVertex fv{f, p.threshold(f).value()};
        const auto& x = am.anchors[static_cast<std::size_t>(am.origin[static_cast<std::size_t>(f)])];
        return make_fork(x, y, fv, "fork", am.route(fv), ay.route(fv));
    }
    return std::nullopt;
}

std::optional<Witness> fork_test_consistent(const Scg& g, const CausalQuery& q, const NcProfile& p) {
    const TemporalVertex y = q.effects.front();
    auto ay = compute_accessibility(g, p, y);
    auto am = compute_accessibility_combined(g, p, q);

    // Forks at a series other than the effect.
    for (SeriesIdx f = 0; f < static_cast<SeriesIdx>(g.size()); ++f) {
        if (f == y.series || !fork_exists_free(p, am, ay, f)) continue;
        TemporalVertex fv{f, p.threshold(f).value()};
        const auto& x = am.anchors[static_cast<std::size_t>(am.origin[static_cast<std::size_t>(f)])];
        return make_fork(x, y, fv, "fork", am.route(fv), ay.route(fv));
    }

    // Forks at the effect series, first instant in NC.
    ExtTime ty = p.threshold(y.series);
    if (!ty.finite() || !(ty <= ay.ceiling(y.series))) return std::nullopt;
    TemporalVertex yv{y.series, ty.value()};

    std::vector<TemporalVertex> other, same;
    for (const auto& x : q.interventions) (x.time == ty.value() ? same : other).push_back(x);
    std::sort(same.begin(), same.end(),
              [](const TemporalVertex& a, const TemporalVertex& b) { return a.series < b.series; });

    if (!other.empty()) {
        auto ao = compute_accessibility_multi(g, p, other);
        if (ty <= ao.ceiling(y.series)) {
            const auto& x = ao.anchors[static_cast<std::size_t>(ao.origin[static_cast<std::size_t>(y.series)])];
            return make_fork(x, y, yv, "fork-effect-lagged", ao.route(yv), ay.route(yv));
        }
    }

    std::vector<TemporalVertex> direct;
    for (const auto& x : same) {
        auto ax = compute_accessibility(g, p, x, ForbiddenArrow{y.series, x.series});
        if (ty <= ax.ceiling(y.series))
            return make_fork(x, y, yv, "fork-effect-indirect", ax.route(yv), ay.route(yv));
        auto full = compute_accessibility(g, p, x);
        if (ty <= full.ceiling(y.series)) direct.push_back(x);
    }
    // Each fork now starts with the instantaneous arrow Y -> X. The route to
    // the effect must not add an instantaneous pattern path X ~> Y, i.e. some
    // S containing X but not Y is never left by an instantaneous arrow.
    std::vector<SeriesIdx> free_series;
    for (SeriesIdx s = 0; s < static_cast<SeriesIdx>(g.size()); ++s) {
        ExtTime t = p.threshold(s);
        if (s != y.series && t.finite() && t <= ExtTime(y.time)) free_series.push_back(s);
    }
    const char* rule = direct.size() >= 2 ? "fork-effect-several" : "fork-effect-direct";
    for (const auto& x : direct) {
        std::vector<SeriesIdx> rest;
        for (SeriesIdx s : free_series)
            if (s != x.series) rest.push_back(s);
        if (rest.size() > kMaxCutSeries) throw BudgetExceeded(std::uint64_t{1} << kMaxCutSeries);
        std::vector<char> in_s(g.size(), 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
            std::fill(in_s.begin(), in_s.end(), 0);
            in_s[static_cast<std::size_t>(x.series)] = 1;
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (mask >> k & 1u) in_s[static_cast<std::size_t>(rest[k])] = 1;
            auto leaves = [&](SeriesIdx a, SeriesIdx b) {
                return in_s[static_cast<std::size_t>(a)] && !in_s[static_cast<std::size_t>(b)];
            };
            auto a5 = compute_accessibility(g, p, y, leaves);
            if (ty <= a5.ceiling(y.series)) return make_fork(x, y, yv, rule, {yv, x}, a5.route(yv));
        }
    }
    return std::nullopt;
}

AdjustmentSet complement_of_cd(const NcProfile& p) {
    AdjustmentSet a = empty_adjustment(p.series_count(), AdjustmentKind::ComplementOfCd);
    auto& part = a.parts.front();
    for (std::size_t s = 0; s < p.series_count(); ++s) {
        ExtTime t = p.threshold(static_cast<SeriesIdx>(s));
        part.last[s] = t.finite() ? ExtTime(t.value() - 1) : ExtTime::pos_inf();
    }
    for (const auto& x : p.query().interventions)
        if (ExtTime(x.time) <= part.last[static_cast<std::size_t>(x.series)]) part.exclusions.insert(x);
    return a;
}

IbcVerdict decide(const Scg& g, const CausalQuery& q, bool consistency) {
    q.validate(g);
    IbcVerdict out;
    out.consistency = consistency;
    out.identifiable = true;
    std::optional<std::set<TemporalVertex>> pruned_all;
    for (const auto& y : q.effects) {
        CausalQuery single{q.interventions, {y}};
        IbcVerdict v = decide_single(g, single, consistency);
        std::set<TemporalVertex> pr;
        for (const auto& x : v.pruned) pr.insert(shift(x, y.time));
        if (!pruned_all) {
            pruned_all = pr;
        } else {
            std::set<TemporalVertex> keep;
            std::set_intersection(pruned_all->begin(), pruned_all->end(), pr.begin(), pr.end(),
                                  std::inserter(keep, keep.begin()));
            pruned_all = std::move(keep);
        }
        if (!v.identifiable) {
            if (out.identifiable) {
                out.identifiable = false;
                out.witness = v.witness;
                shift_witness(*out.witness, y.time);
            }
            continue;
        }
    }
    out.pruned.assign(pruned_all->begin(), pruned_all->end());
    if (out.identifiable) {
        // A common set must avoid the cone of every intervention that some
        // effect keeps, so the per-effect complements are not merged.
        CausalQuery kept;
        kept.effects = q.effects;
        for (const auto& x : q.interventions)
            if (!pruned_all->count(x)) kept.interventions.push_back(x);
        out.adjustment = kept.interventions.empty() ? empty_adjustment(g.size(), AdjustmentKind::ComplementOfCd)
                                                    : complement_of_cd(compute_t_nc(g, kept));
        out.formula = emit_formula(g, out, q);
    }
    return out;
}

bool has_cf_backdoor_path_in_desc(const Scg& g, SeriesIdx x, SeriesIdx y) {
    auto d = descendant_mask(g, x, false);
    // Vertices of Desc(X) reaching X by a non-empty path inside Desc(X).
    std::vector<char> to_x(g.size(), 0);
    std::deque<SeriesIdx> queue{x};
    while (!queue.empty()) {
        SeriesIdx u = queue.front();
        queue.pop_front();
        for (SeriesIdx par : g.parents(u)) {
            auto pi = static_cast<std::size_t>(par);
            if (!d[pi] || to_x[pi]) continue;
            to_x[pi] = 1;
            queue.push_back(par);
        }
    }
    // Vertices of Desc(X) \ {X} reaching Y inside Desc(X) \ {X}.
    std::vector<char> to_y(g.size(), 0);
    if (y != x) {
        to_y[static_cast<std::size_t>(y)] = 1;
        queue.assign(1, y);
        while (!queue.empty()) {
            SeriesIdx u = queue.front();
            queue.pop_front();
            for (SeriesIdx par : g.parents(u)) {
                auto pi = static_cast<std::size_t>(par);
                if (par == x || !d[pi] || to_y[pi]) continue;
                to_y[pi] = 1;
                queue.push_back(par);
            }
        }
    }
    for (std::size_t f = 0; f < g.size(); ++f)
        if (static_cast<SeriesIdx>(f) != x && to_x[f] && to_y[f]) return true;
    return false;
}

namespace {

// Non-descendants of X lying on backdoor paths X <- ... Y of the SCG.
std::set<SeriesIdx> a0_members(const Scg& g, SeriesIdx x, SeriesIdx y, A0Mode mode, std::uint64_t budget) {
    auto d = descendant_mask(g, x, false);
    std::vector<std::vector<SeriesIdx>> nbr(g.size());
    for (auto [a, b] : g.edges()) {
        if (a == b) continue;
        nbr[static_cast<std::size_t>(a)].push_back(b);
        nbr[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& n : nbr) {
        std::sort(n.begin(), n.end());
        n.erase(std::unique(n.begin(), n.end()), n.end());
    }
    std::set<SeriesIdx> out;
    std::vector<char> on_path(g.size(), 0);
    std::vector<SeriesIdx> path{x};
    on_path[static_cast<std::size_t>(x)] = 1;
    std::uint64_t steps = 0;

    auto reaches_y = [&](SeriesIdx from) {
        std::vector<char> seen = on_path;
        std::deque<SeriesIdx> queue{from};
        seen[static_cast<std::size_t>(from)] = 1;
        while (!queue.empty()) {
            SeriesIdx u = queue.front();
            queue.pop_front();
            if (u == y) return true;
            for (SeriesIdx w : nbr[static_cast<std::size_t>(u)]) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
        return false;
    };

    std::function<void(SeriesIdx)> dfs = [&](SeriesIdx u) {
        if (++steps > budget) throw BudgetExceeded(budget);
        const auto& next = (u == x) ? g.parents(x) : nbr[static_cast<std::size_t>(u)];
        for (SeriesIdx w : next) {
            auto wi = static_cast<std::size_t>(w);
            if (on_path[wi]) continue;
            if (w == y) {
                if (mode == A0Mode::FullUnion)
                    for (SeriesIdx s : path)
                        if (!d[static_cast<std::size_t>(s)]) out.insert(s);
                continue;
            }
            if (!d[wi] && mode == A0Mode::FirstNonDescendant) {
                bool inside = std::all_of(path.begin(), path.end(),
                                          [&](SeriesIdx s) { return d[static_cast<std::size_t>(s)] != 0; });
                if (inside) {
                    if (!out.count(w) && reaches_y(w)) out.insert(w);
                    continue;
                }
            }
            on_path[wi] = 1;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            on_path[wi] = 0;
        }
    };
    if (x != y) dfs(x);
    return out;
}

}  // namespace

IbcVerdict monovariate_decide(const Scg& g, SeriesIdx x, SeriesIdx y, std::int64_t gamma, bool consistency,
                              A0Mode mode, std::uint64_t budget) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.size()) throw UnknownVertex("#" + std::to_string(x));
    if (y < 0 || static_cast<std::size_t>(y) >= g.size()) throw UnknownVertex("#" + std::to_string(y));
    if (gamma < 0) throw InvalidQuery("gamma must be non-negative");
    if (x == y && gamma == 0) throw OverlapError("intervention and effect coincide");
    if (!ancestor_mask(g, y, false)[static_cast<std::size_t>(x)])
        throw NotAncestor(g.name(x) + " is not an ancestor of " + g.name(y));

    const TemporalVertex xv{x, -gamma};
    const TemporalVertex yv{y, 0};
    IbcVerdict v;
    v.consistency = consistency;
    std::string rule;
    bool ok = false;
    AdjustmentSet adj;

    if (gamma == 0) {
        ok = !has_cf_backdoor_path_in_desc(g, x, y);
        rule = "backdoor-path-in-descendants";
        if (ok) {
            adj = empty_adjustment(g.size(), AdjustmentKind::A0);
            auto& part = adj.parts.front();
            for (auto& l : part.last) l = ExtTime(-1);
            for (SeriesIdx z : a0_members(g, x, y, mode, budget)) part.last[static_cast<std::size_t>(z)] = ExtTime(0);
        }
    } else if (gamma == 1 && consistency) {
        auto desc = descendant_mask(g, x, false);
        bool first = true;
        for (SeriesIdx par : g.parents(x))
            if (par != x && desc[static_cast<std::size_t>(par)]) first = false;
        bool second = false;
        if (!first && x != y) {
            std::vector<char> keep(g.size(), 0);
            for (SeriesIdx par : g.parents(x)) keep[static_cast<std::size_t>(par)] = 1;
            for (SeriesIdx par : g.parents(y)) keep[static_cast<std::size_t>(par)] = 1;
            std::vector<SeriesIdx> members;
            for (std::size_t s = 0; s < g.size(); ++s)
                if (keep[s] && desc[s]) members.push_back(static_cast<SeriesIdx>(s));
            bool pair = members.size() == 2 && std::count(members.begin(), members.end(), x) &&
                        std::count(members.begin(), members.end(), y);
            if (pair) {
                bool xy = g.has_edge(x, y), yx = g.has_edge(y, x), yy = g.has_edge(y, y);
                second = xy && yx && !yy;
            }
        }
        ok = first || second;
        rule = "instantaneous-parent-cycle";
        if (ok) {
            CausalQuery q{{xv}, {yv}};
            adj = complement_of_cd(compute_t_nc(g, q));
            adj.kind = AdjustmentKind::A1;
        }
    } else {
        ok = !has_big_cycle(g, x);
        rule = "cycle-through-intervention";
        if (ok) {
            adj = empty_adjustment(g.size(), AdjustmentKind::Agamma);
            adj.gamma = gamma;
            auto anc = ancestor_mask(g, x, false);
            for (std::size_t s = 0; s < g.size(); ++s)
                if (anc[s]) adj.parts.front().last[s] = ExtTime(-gamma);
            adj.parts.front().exclusions.insert(xv);
        }
    }

    v.identifiable = ok;
    if (ok) {
        v.adjustment = std::move(adj);
        v.formula = emit_formula(g, v, CausalQuery{{xv}, {yv}});
    } else {
        Witness w;
        w.kind = Witness::Kind::Fork;
        w.intervention = xv;
        w.effect = yv;
        w.rule = rule;
        v.witness = std::move(w);
    }
    return v;
}

std::string describe_adjustment(const Scg& g, const AdjustmentSet& a) {
    std::vector<std::string> parts;
    for (const auto& part : a.parts) {
        std::vector<std::string> terms;
        for (std::size_t s = 0; s < part.last.size(); ++s) {
            ExtTime l = part.last[s];
            if (l.is_neg_inf()) continue;
            const auto& n = g.name(static_cast<SeriesIdx>(s));
            terms.push_back(l.is_pos_inf() ? "{" + n + "_t : all t}"
                                           : "{" + n + "_t : t <= " + std::to_string(l.value()) + "}");
        }
        std::string text = terms.empty() ? "{}" : terms.front();
        for (std::size_t k = 1; k < terms.size(); ++k) text += " ∪ " + terms[k];
        if (!part.exclusions.empty()) {
            std::string ex;
            for (const auto& v : part.exclusions) ex += (ex.empty() ? "" : ", ") + to_string(g, v);
            text = "(" + text + ") ∖ {" + ex + "}";
        }
        parts.push_back(text);
    }
    if (parts.empty()) return "{}";
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) out += " ∪ " + parts[k];
    return out;
}

std::string emit_formula(const Scg& g, const IbcVerdict& v, const CausalQuery& q) {
    if (!v.identifiable) throw NotIdentifiable("effect is not identifiable by common backdoor");
    std::set<TemporalVertex> pruned(v.pruned.begin(), v.pruned.end());
    std::string ys;
    for (const auto& y : q.effects) ys += (ys.empty() ? "" : ", ") + value_name(g, y);
    std::string xs;
    for (const auto& x : q.interventions)
        if (!pruned.count(x)) xs += (xs.empty() ? "" : ", ") + value_name(g, x);
    if (xs.empty()) return "P(" + ys + ")";
    if (!v.adjustment || v.adjustment->empty()) return "P(" + ys + " | " + xs + ")";
    std::string symbol;
    switch (v.adjustment->kind) {
    case AdjustmentKind::ComplementOfCd: symbol = "V^f∖CD"; break;
    case AdjustmentKind::A0: symbol = "A_0"; break;
    case AdjustmentKind::A1: symbol = "A_1"; break;
    case AdjustmentKind::Agamma: symbol = "A_" + std::to_string(v.adjustment->gamma); break;
    }
    return "Σ_z P(" + ys + " | " + xs + ", z) P(z), z over " + symbol + " = " + describe_adjustment(g, *v.adjustment);
}

Scg scg_from_mask(int n, std::uint64_t mask) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('A' + i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mask >> (a * n + b) & 1u) edges.emplace_back(names[static_cast<std::size_t>(a)], names[static_cast<std::size_t>(b)]);
    return Scg(names, edges);
}

CrossCheckReport cross_check_monovariate(const CrossCheckBounds& bounds) {
    CrossCheckReport report;
    for (int n = bounds.min_vertices; n <= bounds.max_vertices; ++n) {
        std::uint64_t graphs = std::uint64_t{1} << (n * n);
        for (std::uint64_t mask = 0; mask < graphs; ++mask) {
            Scg g = scg_from_mask(n, mask);
            for (SeriesIdx x = 0; x < n; ++x) {
                for (SeriesIdx y = 0; y < n; ++y) {
                    if (!ancestor_mask(g, y, false)[static_cast<std::size_t>(x)]) continue;
                    for (std::int64_t gamma = (x == y ? 1 : 0); gamma <= bounds.max_gamma; ++gamma) {
                        for (bool cons : bounds.regimes) {
                            if (++report.cases > bounds.budget) throw BudgetExceeded(bounds.budget);
                            CausalQuery q{{{x, -gamma}}, {{y, 0}}};
                            bool general = decide(g, q, cons).identifiable;
                            bool closed = monovariate_decide(g, x, y, gamma, cons).identifiable;
                            if (general != closed) {
                                std::ostringstream msg;
                                msg << serialize_scg(g, GraphFormat::Json).substr(0, 200) << " do(" << g.name(x)
                                    << "@" << -gamma << ") on " << g.name(y) << "@0 consistency=" << cons
                                    << " general=" << general << " closed=" << closed;
                                std::string s = msg.str();
                                s.erase(std::remove(s.begin(), s.end(), '\n'), s.end());
                                report.disagreements.push_back(s);
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace tsibc
