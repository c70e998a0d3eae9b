#include "tsibc/random_corpus.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace tsibc {

namespace {

// Portable draws: std distributions are implementation-defined, so sample
// from the raw engine output.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::int64_t below(std::mt19937_64& rng, std::int64_t n) { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)); }

}  // namespace

RandomInstance random_instance(std::uint64_t seed, const RandomSpec& spec) {
    std::mt19937_64 rng(seed);
    int n = spec.min_series + static_cast<int>(below(rng, spec.max_series - spec.min_series + 1));
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k) names.push_back("S" + std::to_string(k));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double p = a == b ? spec.self_loop_prob : spec.edge_prob;
            if (unit(rng) < p) edges.push_back({names[a], names[b]});
        }
    RandomInstance inst{Scg(names, edges), {}};
    const Scg& g = inst.scg;

    auto y = static_cast<SeriesIdx>(below(rng, n));
    auto anc = ancestor_mask(g, y, false);
    std::vector<SeriesIdx> pool;
    for (int s = 0; s < n; ++s)
        if (anc[static_cast<std::size_t>(s)]) pool.push_back(static_cast<SeriesIdx>(s));
    if (pool.empty())
        for (int s = 0; s < n; ++s) pool.push_back(static_cast<SeriesIdx>(s));

    int k = 1 + static_cast<int>(below(rng, spec.max_interventions));
    std::set<TemporalVertex> xs;
    for (int attempt = 0; attempt < 8 * k && static_cast<int>(xs.size()) < k; ++attempt) {
        SeriesIdx s = pool[static_cast<std::size_t>(below(rng, static_cast<std::int64_t>(pool.size())))];
        std::int64_t gamma = below(rng, spec.max_gamma + 1);
        if (s == y && gamma == 0) continue;
        xs.insert({s, -gamma});
    }
    inst.query.interventions.assign(xs.begin(), xs.end());
    inst.query.effects = {{y, 0}};
    return inst;
}

std::vector<RandomInstance> random_corpus(const RandomSpec& spec, int count) {
    std::mt19937_64 seeds(spec.seed);
    std::vector<RandomInstance> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(random_instance(seeds(), spec));
    return out;
}

}  // namespace tsibc
