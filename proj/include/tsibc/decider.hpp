#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsibc/cone.hpp"
#include "tsibc/ext_time.hpp"
#include "tsibc/ftcg.hpp"
#include "tsibc/query.hpp"
#include "tsibc/scg.hpp"

namespace tsibc {

struct Witness {
    enum class Kind { DirectedNoFork, Fork };

    Kind kind = Kind::Fork;
    TemporalVertex intervention;
    TemporalVertex effect;
    std::optional<TemporalVertex> fork;
    // Which condition fired, e.g. "directed", "fork", "fork-effect".
    std::string rule;
    // Path sketch from the intervention to the effect; may be empty for
    // closed-form verdicts. The oracle materializes and checks it.
    PathF sketch;
};

// One member of a union: per series, all instants up to `last` (inclusive),
// minus the listed exclusions. `last` = -inf means none, +inf means all.
struct AdjustmentPart {
    std::vector<ExtTime> last;
    std::set<TemporalVertex> exclusions;

    bool contains(const TemporalVertex& v) const;
    bool empty() const;
};

enum class AdjustmentKind { ComplementOfCd, A0, A1, Agamma };

struct AdjustmentSet {
    AdjustmentKind kind = AdjustmentKind::ComplementOfCd;
    std::int64_t gamma = 0;
    std::vector<AdjustmentPart> parts;

    bool contains(const TemporalVertex& v) const;
    bool empty() const;
    std::set<TemporalVertex> materialize(std::size_t series_count, Window w) const;
};

struct IbcVerdict {
    bool identifiable = false;
    bool consistency = false;
    std::vector<TemporalVertex> pruned;
    std::optional<Witness> witness;
    std::optional<AdjustmentSet> adjustment;
    std::optional<std::string> formula;
};

struct Preprocessed {
    CausalQuery query;  // single effect at time 0
    std::vector<TemporalVertex> pruned;
    std::int64_t offset = 0;  // original effect time
};

// Single-effect queries only; the result is shifted so the effect sits at 0.
Preprocessed preprocess(const Scg& g, const CausalQuery& q);

// Below, queries are preprocessed single-effect queries with the effect at 0.
std::optional<Witness> directed_no_fork_test(const Scg& g, const CausalQuery& q);
std::optional<Witness> fork_test_free(const Scg& g, const CausalQuery& q, const NcProfile& p);
std::optional<Witness> fork_test_consistent(const Scg& g, const CausalQuery& q, const NcProfile& p);

AdjustmentSet complement_of_cd(const NcProfile& p);

IbcVerdict decide(const Scg& g, const CausalQuery& q, bool consistency);

enum class A0Mode { FirstNonDescendant, FullUnion };

IbcVerdict monovariate_decide(const Scg& g, SeriesIdx x, SeriesIdx y, std::int64_t gamma, bool consistency,
                              A0Mode mode = A0Mode::FirstNonDescendant, std::uint64_t budget = 1u << 22);

// Closed-form gamma = 0 test: a collider-free backdoor path X .. Y inside Desc(X).
bool has_cf_backdoor_path_in_desc(const Scg& g, SeriesIdx x, SeriesIdx y);

std::string emit_formula(const Scg& g, const IbcVerdict& v, const CausalQuery& q);
std::string describe_adjustment(const Scg& g, const AdjustmentSet& a);

struct CrossCheckBounds {
    int min_vertices = 2;
    int max_vertices = 3;
    std::int64_t max_gamma = 3;
    std::vector<bool> regimes{false, true};
    std::uint64_t budget = 1u << 24;  // SCG x query cases
};

struct CrossCheckReport {
    std::uint64_t cases = 0;
    std::vector<std::string> disagreements;
};

CrossCheckReport cross_check_monovariate(const CrossCheckBounds& bounds);

// All SCGs over `n` vertices named A, B, C, ... in edge-bitmask order.
Scg scg_from_mask(int n, std::uint64_t mask);

}  // namespace tsibc
