#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tsibc/cone.hpp"
#include "tsibc/errors.hpp"
#include "tsibc/oracle.hpp"

using namespace tsibc;
using support::Dag;
using support::edgelist;

namespace {

EnumSpec spec_of(const Scg& g, Window w, int max_lag, bool consistency) {
    EnumSpec s;
    s.scg = g;
    s.window = w;
    s.max_lag = max_lag;
    s.consistency = consistency;
    return s;
}

Scg random_small(std::mt19937_64& rng, int n, bool self_loops) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b && !self_loops) continue;
            if (rng() % 100 < (a == b ? 40u : 35u))
                edges.emplace_back(names[static_cast<std::size_t>(a)], names[static_cast<std::size_t>(b)]);
        }
    return Scg(names, edges);
}

Dag to_dag(const Ftcg& f) {
    Window w = f.window();
    Dag d(static_cast<int>(f.series_count()), w.lo, w.hi);
    for (auto [a, b] : f.edges()) d.add(d.id(a.series, a.time), d.id(b.series, b.time));
    return d;
}

// Random query on a window ending at 0 with the effect at 0.
CausalQuery random_query(std::mt19937_64& rng, const Scg& g, std::int64_t lo) {
    auto n = static_cast<SeriesIdx>(g.size());
    CausalQuery q;
    q.effects.push_back({static_cast<SeriesIdx>(rng() % static_cast<std::uint64_t>(n)), 0});
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
        TemporalVertex x{static_cast<SeriesIdx>(rng() % static_cast<std::uint64_t>(n)),
                         lo + 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(-lo))};
        if (x == q.effects[0] || std::find(q.interventions.begin(), q.interventions.end(), x) != q.interventions.end())
            continue;
        q.interventions.push_back(x);
    }
    if (q.interventions.empty()) q.interventions.push_back({q.effects[0].series, -1});
    return q;
}

}  // namespace

TEST_CASE("reduce maps arrows to series edges") {
    Scg g = edgelist("X -> Y\nX -> X\nZ -> Y\n");
    SeriesIdx x = g.index("X"), y = g.index("Y");
    Ftcg f(series_names_of(g), Window{-1, 0});
    f.add_edge({x, -1}, {x, 0});
    f.add_edge({x, -1}, {y, 0});
    f.add_edge({x, 0}, {y, 0});
    Scg r = reduce(f);
    CHECK(r.names() == g.names());
    CHECK(r.edge_count() == 2);
    CHECK(r.has_edge(x, x));
    CHECK(r.has_edge(x, y));
    CHECK_FALSE(r.has_edge(g.index("Z"), y));
}

TEST_CASE("candidate counts on tiny specs") {
    Scg lone = edgelist("A\n");
    CHECK(enumerate_candidates(spec_of(lone, {-1, 0}, 1, false), [](const Ftcg&) { return true; }) == 1);
    Scg xy = edgelist("X -> Y\n");
    CHECK(enumerate_candidates(spec_of(xy, {-1, 0}, 1, false), [](const Ftcg&) { return true; }) == 8);
    CHECK(enumerate_candidates(spec_of(xy, {-1, 0}, 1, true), [](const Ftcg&) { return true; }) == 4);
    auto exact = spec_of(xy, {-1, 0}, 1, false);
    exact.relaxation = Relaxation::ExactReduction;
    CHECK(enumerate_candidates(exact, [](const Ftcg&) { return true; }) == 7);
}

TEST_CASE("candidate enumeration matches a brute-force enumerator") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        Scg g = random_small(rng, 2 + static_cast<int>(rng() % 2), true);
        for (bool cons : {false, true}) {
            auto spec = spec_of(g, {-1, 0}, 1, cons);
            std::set<std::string> mine, theirs;
            for (const Dag& d : support::all_candidates(g, -1, 0, 1, cons)) {
                std::string key;
                for (int u = 0; u < d.size(); ++u)
                    for (int w : d.out[static_cast<std::size_t>(u)]) key += std::to_string(u) + ">" + std::to_string(w) + ";";
                mine.insert(key);
            }
            std::uint64_t count = enumerate_candidates(spec, [&](const Ftcg& f) {
                CHECK(f.is_acyclic());
                Scg r = reduce(f);
                for (auto [a, b] : r.edges()) CHECK(g.has_edge(a, b));
                Dag d = to_dag(f);
                std::string key;
                for (int u = 0; u < d.size(); ++u)
                    for (int w : d.out[static_cast<std::size_t>(u)]) key += std::to_string(u) + ">" + std::to_string(w) + ";";
                theirs.insert(key);
                return true;
            });
            CHECK(count == mine.size());
            CHECK(mine == theirs);
        }
    }
}

TEST_CASE("enumeration respects the budget") {
    Scg g = edgelist("A -> B\nB -> C\nA -> C\nA -> A\nB -> B\nC -> C\n");
    auto spec = spec_of(g, {-2, 0}, 2, false);
    spec.budget = 16;
    CHECK_THROWS_AS(enumerate_candidates(spec, [](const Ftcg&) { return true; }), BudgetExceeded);
}

TEST_CASE("d-separation examples") {
    Scg g = edgelist("A -> B\nB -> C\nA -> D\nC -> D\n");
    SeriesIdx a = g.index("A"), b = g.index("B"), c = g.index("C"), d = g.index("D");
    Ftcg f(series_names_of(g), Window{0, 0});
    f.add_edge({a, 0}, {b, 0});
    f.add_edge({b, 0}, {c, 0});
    f.add_edge({a, 0}, {d, 0});
    f.add_edge({c, 0}, {d, 0});
    CHECK_FALSE(d_separated(f, {a, 0}, {c, 0}, {}));
    CHECK(d_separated(f, {a, 0}, {c, 0}, {{b, 0}}));
    CHECK_FALSE(d_separated(f, {a, 0}, {c, 0}, {{b, 0}, {d, 0}}));
    CHECK_FALSE(d_separated(f, {b, 0}, {d, 0}, {}));
    CHECK(d_separated(f, {b, 0}, {d, 0}, {{a, 0}, {c, 0}}));
}

TEST_CASE("d-separation matches path enumeration and is symmetric") {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int iter = 0; iter < 40; ++iter) {
        Scg g = random_small(rng, 2 + static_cast<int>(rng() % 2), true);
        auto cands = support::all_candidates(g, -1, 0, 1, false);
        for (std::size_t k = 0; k < cands.size(); k += 1 + cands.size() / 6) {
            const Dag& d = cands[k];
            Ftcg f(series_names_of(g), Window{-1, 0});
            for (int u = 0; u < d.size(); ++u)
                for (int w : d.out[static_cast<std::size_t>(u)]) f.add_edge(d.vertex(u), d.vertex(w));
            for (int trial = 0; trial < 8; ++trial) {
                int a = static_cast<int>(rng() % static_cast<std::uint64_t>(d.size()));
                int b = static_cast<int>(rng() % static_cast<std::uint64_t>(d.size()));
                if (a == b) continue;
                std::set<int> z;
                std::set<TemporalVertex> zt;
                for (int v = 0; v < d.size(); ++v)
                    if (v != a && v != b && rng() % 3 == 0) {
                        z.insert(v);
                        zt.insert(d.vertex(v));
                    }
                bool lib = d_separated(f, d.vertex(a), d.vertex(b), zt);
                CHECK(lib == support::dsep_by_paths(d, a, b, z));
                CHECK(lib == d_separated(f, d.vertex(b), d.vertex(a), zt));
                ++checked;
            }
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("backdoor criterion examples") {
    Scg g = edgelist("Z -> X\nZ -> Y\nX -> M\nM -> Y\n");
    SeriesIdx x = g.index("X"), y = g.index("Y"), z = g.index("Z"), m = g.index("M");
    Ftcg f(series_names_of(g), Window{0, 0});
    f.add_edge({z, 0}, {x, 0});
    f.add_edge({z, 0}, {y, 0});
    f.add_edge({x, 0}, {m, 0});
    f.add_edge({m, 0}, {y, 0});
    CHECK(backdoor_criterion(f, {{x, 0}}, {{y, 0}}, {{z, 0}}));
    CHECK_FALSE(backdoor_criterion(f, {{x, 0}}, {{y, 0}}, {}));
    CHECK_FALSE(backdoor_criterion(f, {{x, 0}}, {{y, 0}}, {{z, 0}, {m, 0}}));
}

TEST_CASE("witness examples") {
    Scg g = edgelist("X -> Y\nX -> X\nY -> Y\n");
    SeriesIdx x = g.index("X"), y = g.index("Y");
    auto all = [](const TemporalVertex&) { return true; };
    SUBCASE("lag-1 effect through the self-loop is confounded") {
        CausalQuery q{{{x, -1}}, {{y, 0}}};
        auto spec = default_enum_spec(g, q, false);
        auto v = witness_search(spec, q, all);
        REQUIRE(v.exists_witness);
        REQUIRE(v.ftcg);
        CHECK(is_collider_free_backdoor(*v.ftcg, *v.witness));
        CHECK(v.witness->vertices.front() == TemporalVertex{x, -1});
        CHECK(v.witness->vertices.back() == TemporalVertex{y, 0});
    }
    SUBCASE("intervening on the recent past leaves older confounding") {
        // X_-1 <- X_-2 -> Y_0 through a lag-2 arrow.
        CausalQuery q{{{x, -1}, {x, 0}}, {{y, 0}}};
        auto v = witness_search(default_enum_spec(g, q, true), q, all);
        REQUIRE(v.exists_witness);
        CHECK(v.witness->vertices.size() == 3);
    }
    SUBCASE("a cause without parents has no backdoor") {
        Scg h = edgelist("X -> Y\nY -> Y\n");
        CausalQuery q{{{h.index("X"), -2}}, {{h.index("Y"), 0}}};
        for (bool cons : {false, true}) {
            auto spec = default_enum_spec(h, q, cons);
            CHECK_FALSE(witness_search(spec, q, all).exists_witness);
        }
        auto small = spec_of(h, {-2, 0}, 2, false);
        CHECK_FALSE(witness_search_enumerated(small, q, all).exists_witness);
    }
    SUBCASE("a witness can be pinned to an intervention") {
        CausalQuery q{{{x, -2}, {x, 0}}, {{y, 0}}};
        auto spec = default_enum_spec(g, q, false);
        WitnessConstraint c;
        c.intervention = TemporalVertex{x, 0};
        auto v = witness_search(spec, q, all, c);
        REQUIRE(v.exists_witness);
        CHECK(v.witness->vertices.front() == TemporalVertex{x, 0});
    }
}

TEST_CASE("path-space witness search matches brute force") {
    std::mt19937_64 rng(17);
    auto all = [](const TemporalVertex&) { return true; };
    int positives = 0, total = 0;
    for (int iter = 0; iter < 120; ++iter) {
        Scg g = random_small(rng, 2 + static_cast<int>(rng() % 2), true);
        CausalQuery q = random_query(rng, g, -1);
        for (bool cons : {false, true}) {
            auto spec = spec_of(g, {-1, 0}, 1, cons);
            auto cands = support::all_candidates(g, -1, 0, 1, cons);
            bool expected = support::brute_witness(cands, q);
            auto v = witness_search(spec, q, all);
            CHECK(v.exists_witness == expected);
            CHECK(witness_search_enumerated(spec, q, all).exists_witness == expected);
            if (v.exists_witness) {
                REQUIRE(v.ftcg);
                CHECK(v.ftcg->is_acyclic());
                CHECK(is_collider_free_backdoor(*v.ftcg, *v.witness));
                ++positives;
            }
            ++total;
        }
    }
    CHECK(positives > 0);
    CHECK(positives < total);
}

TEST_CASE("oracle CD routes agree with brute force") {
    std::mt19937_64 rng(19);
    for (int iter = 0; iter < 100; ++iter) {
        Scg g = random_small(rng, 2 + static_cast<int>(rng() % 2), true);
        CausalQuery q = random_query(rng, g, -1);
        for (bool cons : {false, true}) {
            auto spec = spec_of(g, {-1, 0}, 1, cons);
            auto expected = support::brute_cd(support::all_candidates(g, -1, 0, 1, cons), q,
                                     g.size() * static_cast<std::size_t>(spec.window.length()));
            CHECK(oracle_cd(spec, q) == expected);
            CHECK(oracle_cd_enumerated(spec, q) == expected);
        }
    }
}

TEST_CASE("oracle accessibility routes agree") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 80; ++iter) {
        Scg g = random_small(rng, 2 + static_cast<int>(rng() % 2), true);
        CausalQuery q = random_query(rng, g, -2);
        for (bool cons : {false, true}) {
            if (!cons && g.size() > 2) continue;  // too many free slots
            auto spec = spec_of(g, {-2, 0}, 1, cons);
            auto cd = oracle_cd(spec, q);
            std::vector<char> nc(cd.size());
            for (std::size_t v = 0; v < cd.size(); ++v) nc[v] = !cd[v];
            for (const auto& anchor : q.interventions)
                CHECK(oracle_accessible(spec, nc, anchor) == oracle_accessible_enumerated(spec, nc, anchor));
            CHECK(oracle_accessible(spec, nc, q.effects[0]) == oracle_accessible_enumerated(spec, nc, q.effects[0]));
        }
    }
}

TEST_CASE("certificate contains its path") {
    Scg g = edgelist("X -> Y\nY -> X\nX -> X\nY -> Y\n");
    SeriesIdx x = g.index("X"), y = g.index("Y");
    auto spec = spec_of(g, {-2, 0}, 1, true);
    PathF p{{{x, -1}, {y, -1}, {y, 0}}, {Arrow::Backward, Arrow::Forward}};
    Ftcg f = certificate_for(spec, p);
    CHECK(f.is_acyclic());
    CHECK(is_collider_free_backdoor(f, p));
    CHECK(f.has_edge({y, -2}, {y, -1}));  // consistency repeats patterns
}

TEST_CASE("spec validation") {
    Scg g = edgelist("X -> X\n");
    CHECK_THROWS(spec_of(g, {-1, 0}, 0, false).validate());
    CHECK_THROWS(spec_of(g, {0, 0}, 1, false).validate());
    CHECK_NOTHROW(spec_of(g, {-1, 0}, 1, false).validate());
    CausalQuery q{{{0, -3}}, {{0, 0}}};
    CHECK_THROWS_AS(window_id(spec_of(g, {-1, 0}, 1, false), q.interventions[0]), OutOfWindow);
}
