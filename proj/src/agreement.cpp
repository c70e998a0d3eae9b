#include "tsibc/agreement.hpp"

#include <sstream>

namespace tsibc {

std::string AgreementReport::summary(const Scg& g) const {
    std::ostringstream out;
    out << (agree ? "AGREE" : "DISAGREE") << " decide=" << (verdict.identifiable ? "identifiable" : "non-identifiable");
    for (const auto& e : effects) {
        out << " | " << to_string(g, e.effect) << ": oracle " << (e.oracle_witness ? "witness" : "no-witness");
        if (!e.witness_embeds) out << " (decider witness not embedded)";
    }
    out << " | explored=" << explored;
    return out.str();
}

AgreementReport oracle_check(const Scg& g, const CausalQuery& q, bool consistency, const OracleOverrides& o) {
    AgreementReport r;
    r.verdict = decide(g, q, consistency);
    bool any_witness = false;
    for (const auto& y : q.effects) {
        Preprocessed pre = preprocess(g, CausalQuery{q.interventions, {y}});
        EffectAgreement e;
        e.effect = y;
        e.decided_identifiable = decide(g, CausalQuery{q.interventions, {y}}, consistency).identifiable;
        if (!pre.query.interventions.empty()) {
            EnumSpec spec = default_enum_spec(g, pre.query, consistency);
            if (o.window_lo) spec.window.lo = *o.window_lo;
            if (o.window_hi) spec.window.hi = *o.window_hi;
            if (o.max_lag) spec.max_lag = *o.max_lag;
            if (o.budget) spec.budget = *o.budget;
            std::vector<char> cd = o.enumerate ? oracle_cd_enumerated(spec, pre.query) : oracle_cd(spec, pre.query);
            Region region = [&](const TemporalVertex& v) { return cd[static_cast<std::size_t>(window_id(spec, v))] != 0; };
            OracleVerdict ov = o.enumerate ? witness_search_enumerated(spec, pre.query, region)
                                           : witness_search(spec, pre.query, region);
            e.oracle_witness = ov.exists_witness;
            e.explored = ov.explored;
            if (ov.witness) {
                e.path = *ov.witness;
                for (auto& v : e.path->vertices) v.time += pre.offset;
            }
            if (!e.decided_identifiable && !o.enumerate) {
                IbcVerdict single = decide(g, CausalQuery{q.interventions, {y}}, consistency);
                const Witness& w = *single.witness;
                WitnessConstraint c;
                c.intervention = TemporalVertex{w.intervention.series, w.intervention.time - pre.offset};
                if (w.fork) c.fork = TemporalVertex{w.fork->series, w.fork->time - pre.offset};
                // The fork position is a hint: fall back to any witness from the
                // same intervention when the hinted turning vertex leaves the window.
                OracleVerdict hinted{};
                bool in_window = !c.fork || spec.window.contains(c.fork->time);
                if (in_window) hinted = witness_search(spec, pre.query, region, c);
                if (!hinted.exists_witness) {
                    c.fork.reset();
                    hinted = witness_search(spec, pre.query, region, c);
                }
                e.witness_embeds = hinted.exists_witness;
                e.explored += hinted.explored;
            }
        }
        if (e.decided_identifiable == e.oracle_witness || !e.witness_embeds) r.agree = false;
        any_witness = any_witness || e.oracle_witness;
        r.explored += e.explored;
        r.effects.push_back(std::move(e));
    }
    if (r.verdict.identifiable == any_witness) r.agree = false;
    return r;
}

}  // namespace tsibc
