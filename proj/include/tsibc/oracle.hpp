#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "tsibc/ftcg.hpp"
#include "tsibc/query.hpp"
#include "tsibc/scg.hpp"

namespace tsibc {

enum class Relaxation { ExactReduction, SubgraphReduction };

struct EnumSpec {
    Scg scg;
    Window window;
    int max_lag = 1;
    bool consistency = false;
    Relaxation relaxation = Relaxation::SubgraphReduction;
    std::uint64_t budget = std::uint64_t{1} << 22;

    void validate() const;  // throws Error
};

// Window [-(G+2), 0] and max lag G+1 where G is the largest gamma of q.
EnumSpec default_enum_spec(const Scg& g, const CausalQuery& q, bool consistency);

Scg reduce(const Ftcg& f);

// Calls `visit` on every candidate in canonical bitmask order until it
// returns false. Returns the number of candidates visited.
std::uint64_t enumerate_candidates(const EnumSpec& spec, const std::function<bool(const Ftcg&)>& visit);

bool d_separated(const Ftcg& f, const TemporalVertex& a, const TemporalVertex& b,
                 const std::set<TemporalVertex>& z);

bool backdoor_criterion(const Ftcg& f, const std::set<TemporalVertex>& xs, const std::set<TemporalVertex>& ys,
                        const std::set<TemporalVertex>& z);

struct OracleVerdict {
    bool exists_witness = false;
    std::optional<PathF> witness;
    std::optional<Ftcg> ftcg;
    std::uint64_t explored = 0;  // search states or candidates examined
};

using Region = std::function<bool(const TemporalVertex&)>;

// Restricts which witnesses count: a given intervention, and/or a given
// turning vertex (the top of the backward segment; the effect itself for a
// purely directed path).
struct WitnessConstraint {
    std::optional<TemporalVertex> intervention;
    std::optional<TemporalVertex> fork;
    bool shortest = true;
};

// Queries below have a single effect; interventions and effect must lie in
// the window. Searches are exhaustive over all candidates of the spec.

// Path-space search: a simple path is realizable in some candidate iff it
// respects time and lags, and (with consistency) its instantaneous arrows
// are acyclic at the series level. Subgraph relaxation only.
OracleVerdict witness_search(const EnumSpec& spec, const CausalQuery& q, const Region& region,
                             const WitnessConstraint& c = {});

// Same verdict by explicit candidate enumeration.
OracleVerdict witness_search_enumerated(const EnumSpec& spec, const CausalQuery& q, const Region& region);

// Cone of descendants over the window, indexed like Ftcg ids.
std::vector<char> oracle_cd(const EnumSpec& spec, const CausalQuery& q);
std::vector<char> oracle_cd_enumerated(const EnumSpec& spec, const CausalQuery& q);

// Window vertices f != anchor with a directed path f ~> anchor in some
// candidate whose vertices other than the anchor all lie in `nc`.
std::vector<char> oracle_accessible(const EnumSpec& spec, const std::vector<char>& nc, const TemporalVertex& anchor);
std::vector<char> oracle_accessible_enumerated(const EnumSpec& spec, const std::vector<char>& nc,
                                               const TemporalVertex& anchor);

// Candidate realizing `path` (subgraph relaxation): its arrows, copied
// across the window under consistency.
Ftcg certificate_for(const EnumSpec& spec, const PathF& path);

int window_id(const EnumSpec& spec, const TemporalVertex& v);
TemporalVertex window_vertex(const EnumSpec& spec, int id);

}  // namespace tsibc
