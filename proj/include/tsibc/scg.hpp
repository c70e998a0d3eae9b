#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tsibc {

using SeriesIdx = std::int32_t;

enum class GraphFormat { Json, Edgelist, Dot };

// Summary causal graph. Vertices are kept in lexicographic order, so
// index order doubles as the canonical tie-breaking order.
class Scg {
public:
    Scg() = default;
    Scg(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return names_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& name(SeriesIdx v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& names() const { return names_; }
    SeriesIdx index(std::string_view name) const;  // throws UnknownVertex
    std::optional<SeriesIdx> find(std::string_view name) const;

    const std::vector<SeriesIdx>& children(SeriesIdx v) const { return children_[static_cast<std::size_t>(v)]; }
    const std::vector<SeriesIdx>& parents(SeriesIdx v) const { return parents_[static_cast<std::size_t>(v)]; }
    bool has_edge(SeriesIdx a, SeriesIdx b) const;

    // Canonically sorted edge list.
    std::vector<std::pair<SeriesIdx, SeriesIdx>> edges() const;

    bool operator==(const Scg& o) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, SeriesIdx> index_;
    std::vector<std::vector<SeriesIdx>> children_;
    std::vector<std::vector<SeriesIdx>> parents_;
    std::size_t edge_count_ = 0;
};

bool valid_series_name(std::string_view name);

Scg parse_scg(std::string_view text, GraphFormat format);
std::string serialize_scg(const Scg& g, GraphFormat format);
GraphFormat format_from_name(std::string_view name);  // "json", "edgelist", "dot"

std::set<std::string> parents(const Scg& g, std::string_view v);
std::set<std::string> descendants(const Scg& g, std::string_view v, bool strict);
std::set<std::string> ancestors(const Scg& g, std::string_view v, bool strict);
bool has_big_cycle(const Scg& g, std::string_view v);
Scg induced_subgraph(const Scg& g, const std::set<std::string>& keep);

// Index-level variants returning membership masks.
std::vector<char> descendant_mask(const Scg& g, SeriesIdx v, bool strict);
std::vector<char> ancestor_mask(const Scg& g, SeriesIdx v, bool strict);
bool has_big_cycle(const Scg& g, SeriesIdx v);

}  // namespace tsibc
