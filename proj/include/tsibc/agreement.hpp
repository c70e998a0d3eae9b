#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsibc/decider.hpp"
#include "tsibc/oracle.hpp"

namespace tsibc {

struct EffectAgreement {
    TemporalVertex effect;
    bool decided_identifiable = false;
    bool oracle_witness = false;
    // The decider's witness re-found by the oracle from the same intervention.
    bool witness_embeds = true;
    std::optional<PathF> path;
    std::uint64_t explored = 0;
};

struct AgreementReport {
    bool agree = true;
    IbcVerdict verdict;
    std::vector<EffectAgreement> effects;
    std::uint64_t explored = 0;

    std::string summary(const Scg& g) const;
};

struct OracleOverrides {
    std::optional<std::int64_t> window_lo;
    std::optional<std::int64_t> window_hi;
    std::optional<int> max_lag;
    std::optional<std::uint64_t> budget;
    bool enumerate = false;
};

// Runs decide, then the oracle on each preprocessed single-effect subquery
// with region = the oracle's own cone of descendants.
AgreementReport oracle_check(const Scg& g, const CausalQuery& q, bool consistency, const OracleOverrides& o = {});

}  // namespace tsibc
