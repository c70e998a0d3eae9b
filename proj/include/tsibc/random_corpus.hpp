#pragma once

#include <cstdint>
#include <vector>

#include "tsibc/query.hpp"
#include "tsibc/scg.hpp"

namespace tsibc {

struct RandomSpec {
    std::uint64_t seed = 1;
    int min_series = 2;
    int max_series = 5;
    double edge_prob = 0.3;
    double self_loop_prob = 0.3;
    int max_interventions = 3;
    std::int64_t max_gamma = 2;
};

struct RandomInstance {
    Scg scg;
    CausalQuery query;  // single effect at time 0
};

// Series are named S0, S1, ... The effect series is drawn first; intervention
// series are drawn from its ancestors when it has any, so that few queries
// are pruned away entirely.
RandomInstance random_instance(std::uint64_t seed, const RandomSpec& spec);

// `count` instances with seeds derived from spec.seed.
std::vector<RandomInstance> random_corpus(const RandomSpec& spec, int count);

}  // namespace tsibc
