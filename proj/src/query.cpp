#include "tsibc/query.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "tsibc/errors.hpp"

namespace tsibc {

void CausalQuery::validate(const Scg& g) const {
    if (effects.empty()) throw InvalidQuery("query needs at least one effect");
    auto check = [&](const TemporalVertex& v) {
        if (v.series < 0 || static_cast<std::size_t>(v.series) >= g.size())
            throw UnknownVertex("#" + std::to_string(v.series));
    };
    std::set<TemporalVertex> seen;
    for (const auto& x : interventions) {
        check(x);
        if (!seen.insert(x).second)
            throw InvalidQuery("duplicate intervention " + to_string(g, x));
    }
    std::set<TemporalVertex> eff;
    for (const auto& y : effects) {
        check(y);
        if (!eff.insert(y).second) throw InvalidQuery("duplicate effect " + to_string(g, y));
        if (seen.count(y)) throw OverlapError(to_string(g, y) + " is both an intervention and an effect");
    }
}

CausalQuery CausalQuery::shifted(std::int64_t delta) const {
    CausalQuery q = *this;
    for (auto& x : q.interventions) x.time += delta;
    for (auto& y : q.effects) y.time += delta;
    return q;
}

std::int64_t CausalQuery::max_gamma() const {
    std::int64_t g = 0;
    for (const auto& x : interventions) g = std::max(g, -x.time);
    return g;
}

TemporalVertex parse_temporal(const Scg& g, std::string_view spec) {
    auto at = spec.rfind('@');
    if (at == std::string_view::npos || at == 0 || at + 1 == spec.size())
        throw InvalidQuery("expected SERIES@TIME, got '" + std::string(spec) + "'");
    std::string_view name = spec.substr(0, at);
    std::string_view num = spec.substr(at + 1);
    std::int64_t t = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), t);
    if (ec != std::errc() || ptr != num.data() + num.size())
        throw InvalidQuery("bad time in '" + std::string(spec) + "'");
    return {g.index(name), t};
}

CausalQuery make_query(const Scg& g, const std::vector<std::string>& dos,
                       const std::vector<std::string>& effects) {
    CausalQuery q;
    for (const auto& d : dos) q.interventions.push_back(parse_temporal(g, d));
    for (const auto& e : effects) q.effects.push_back(parse_temporal(g, e));
    q.validate(g);
    return q;
}

}  // namespace tsibc
