#include "tsibc/scg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "tsibc/errors.hpp"

namespace tsibc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<char> reach(const Scg& g, SeriesIdx v, bool strict, bool forward) {
    std::vector<char> seen(g.size(), 0);
    std::deque<SeriesIdx> queue;
    auto next = [&](SeriesIdx u) -> const std::vector<SeriesIdx>& {
        return forward ? g.children(u) : g.parents(u);
    };
    if (!strict) seen[static_cast<std::size_t>(v)] = 1;
    queue.push_back(v);
    while (!queue.empty()) {
        SeriesIdx u = queue.front();
        queue.pop_front();
        for (SeriesIdx w : next(u)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

std::set<std::string> to_names(const Scg& g, const std::vector<char>& mask) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.insert(g.name(static_cast<SeriesIdx>(i)));
    return out;
}

struct RawGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::size_t> edge_lines;

    void add_vertex(const std::string& v) {
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
    }
};

void check_name(std::string_view name, std::size_t line) {
    if (!valid_series_name(name))
        throw ParseError(line, "invalid series name '" + std::string(name) + "'");
}

// Handles "A", "A -> B" and chains "A -> B -> C".
void parse_statement(std::string_view stmt, std::size_t line, RawGraph& raw) {
    std::vector<std::string> parts;
    while (true) {
        auto pos = stmt.find("->");
        std::string_view head = trim(stmt.substr(0, pos));
        if (head.empty()) throw ParseError(line, "missing vertex name");
        check_name(head, line);
        parts.emplace_back(head);
        if (pos == std::string_view::npos) break;
        stmt = stmt.substr(pos + 2);
    }
    for (const auto& p : parts) raw.add_vertex(p);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        raw.edges.emplace_back(parts[i], parts[i + 1]);
        raw.edge_lines.push_back(line);
    }
}

Scg build(RawGraph raw) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : raw.edges)
        if (!seen.insert(e).second) throw DuplicateEdge(e.first, e.second);
    return Scg(std::move(raw.vertices), raw.edges);
}

Scg parse_edgelist(std::string_view text) {
    RawGraph raw;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) parse_statement(line, line_no, raw);
        start = end + 1;
    }
    return build(std::move(raw));
}

Scg parse_dot(std::string_view text) {
    std::size_t line = 1;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size()) {
            char c = text[i];
            if (c == '\n') {
                ++line;
                ++i;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
                while (i < text.size() && text[i] != '\n') ++i;
            } else {
                break;
            }
        }
    };
    skip_ws();
    if (text.substr(i, 7) != "digraph") throw ParseError(line, "expected 'digraph'");
    i += 7;
    skip_ws();
    if (i < text.size() && text[i] != '{') {
        std::size_t name_start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '{') ++i;
        check_name(text.substr(name_start, i - name_start), line);
        skip_ws();
    }
    if (i >= text.size() || text[i] != '{') throw ParseError(line, "expected '{'");
    ++i;

    RawGraph raw;
    bool closed = false;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '}') {
            closed = true;
            ++i;
            break;
        }
        std::size_t stmt_line = line;
        std::size_t s = i;
        while (i < text.size() && text[i] != ';' && text[i] != '\n' && text[i] != '}') {
            if (text[i] == '[' || text[i] == '=' || text[i] == '"')
                throw ParseError(line, "attributes and quoted ids are not supported");
            ++i;
        }
        std::string_view stmt = trim(text.substr(s, i - s));
        if (!stmt.empty()) parse_statement(stmt, stmt_line, raw);
        if (i < text.size() && text[i] == ';') ++i;
    }
    if (!closed) throw ParseError(line, "missing closing '}'");
    skip_ws();
    if (i < text.size()) throw ParseError(line, "trailing content after '}'");
    return build(std::move(raw));
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

Scg parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
    }
    if (!doc.is_object()) throw ParseError(1, "top-level value must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError(1, "missing 'vertices' array");
    RawGraph raw;
    std::set<std::string> declared;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw ParseError(1, "vertex names must be strings");
        auto name = v.get<std::string>();
        check_name(name, 1);
        if (!declared.insert(name).second) throw ParseError(1, "duplicate vertex '" + name + "'");
        raw.vertices.push_back(name);
    }
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError(1, "'edges' must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError(1, "each edge must be a pair of strings");
            auto a = e[0].get<std::string>();
            auto b = e[1].get<std::string>();
            if (!declared.count(a)) throw UnknownVertex(a);
            if (!declared.count(b)) throw UnknownVertex(b);
            raw.edges.emplace_back(a, b);
        }
    }
    return build(std::move(raw));
}

}  // namespace

bool valid_series_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        switch (c) {
        case '-': case '>': case ',': case ';': case '@':
        case '#': case '{': case '}': case '"': case '[': case ']': case '=':
            return false;
        default:
            break;
        }
    }
    return true;
}

Scg::Scg(std::vector<std::string> vertices,
         const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
    std::sort(names_.begin(), names_.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_series_name(names_[i])) throw Error("invalid series name '" + names_[i] + "'");
        if (i > 0 && names_[i] == names_[i - 1]) throw Error("duplicate vertex '" + names_[i] + "'");
        index_.emplace(names_[i], static_cast<SeriesIdx>(i));
    }
    children_.assign(names_.size(), {});
    parents_.assign(names_.size(), {});
    for (const auto& [a, b] : edges) {
        SeriesIdx ia = index(a);
        SeriesIdx ib = index(b);
        children_[static_cast<std::size_t>(ia)].push_back(ib);
        parents_[static_cast<std::size_t>(ib)].push_back(ia);
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto& ch = children_[i];
        std::sort(ch.begin(), ch.end());
        if (std::adjacent_find(ch.begin(), ch.end()) != ch.end()) {
            auto dup = *std::adjacent_find(ch.begin(), ch.end());
            throw DuplicateEdge(names_[i], names_[static_cast<std::size_t>(dup)]);
        }
        std::sort(parents_[i].begin(), parents_[i].end());
        edge_count_ += ch.size();
    }
}

SeriesIdx Scg::index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UnknownVertex(std::string(name));
    return it->second;
}

std::optional<SeriesIdx> Scg::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Scg::has_edge(SeriesIdx a, SeriesIdx b) const {
    const auto& ch = children(a);
    return std::binary_search(ch.begin(), ch.end(), b);
}

std::vector<std::pair<SeriesIdx, SeriesIdx>> Scg::edges() const {
    std::vector<std::pair<SeriesIdx, SeriesIdx>> out;
    out.reserve(edge_count_);
    for (std::size_t a = 0; a < names_.size(); ++a)
        for (SeriesIdx b : children_[a]) out.emplace_back(static_cast<SeriesIdx>(a), b);
    return out;
}

bool Scg::operator==(const Scg& o) const {
    return names_ == o.names_ && children_ == o.children_;
}

Scg parse_scg(std::string_view text, GraphFormat format) {
    switch (format) {
    case GraphFormat::Json: return parse_json(text);
    case GraphFormat::Edgelist: return parse_edgelist(text);
    case GraphFormat::Dot: return parse_dot(text);
    }
    throw Error("unknown graph format");
}

GraphFormat format_from_name(std::string_view name) {
    if (name == "json") return GraphFormat::Json;
    if (name == "edgelist" || name == "txt") return GraphFormat::Edgelist;
    if (name == "dot" || name == "dot-subset" || name == "gv") return GraphFormat::Dot;
    throw Error("unknown graph format '" + std::string(name) + "'");
}

std::string serialize_scg(const Scg& g, GraphFormat format) {
    auto edges = g.edges();
    std::vector<char> touched(g.size(), 0);
    for (auto [a, b] : edges) touched[static_cast<std::size_t>(a)] = touched[static_cast<std::size_t>(b)] = 1;
    std::ostringstream out;
    switch (format) {
    case GraphFormat::Json: {
        nlohmann::ordered_json doc;
        doc["vertices"] = g.names();
        doc["edges"] = nlohmann::ordered_json::array();
        for (auto [a, b] : edges) doc["edges"].push_back({g.name(a), g.name(b)});
        out << doc.dump() << "\n";
        break;
    }
    case GraphFormat::Edgelist:
        for (std::size_t v = 0; v < g.size(); ++v)
            if (!touched[v]) out << g.name(static_cast<SeriesIdx>(v)) << "\n";
        for (auto [a, b] : edges) out << g.name(a) << " -> " << g.name(b) << "\n";
        break;
    case GraphFormat::Dot:
        out << "digraph {\n";
        for (std::size_t v = 0; v < g.size(); ++v)
            if (!touched[v]) out << "  " << g.name(static_cast<SeriesIdx>(v)) << ";\n";
        for (auto [a, b] : edges) out << "  " << g.name(a) << " -> " << g.name(b) << ";\n";
        out << "}\n";
        break;
    }
    return out.str();
}

std::vector<char> descendant_mask(const Scg& g, SeriesIdx v, bool strict) {
    return reach(g, v, strict, true);
}

std::vector<char> ancestor_mask(const Scg& g, SeriesIdx v, bool strict) {
    return reach(g, v, strict, false);
}

bool has_big_cycle(const Scg& g, SeriesIdx v) {
    // v lies on a cycle of length >= 2 iff some child other than v reaches v.
    auto anc = ancestor_mask(g, v, false);
    for (SeriesIdx c : g.children(v))
        if (c != v && anc[static_cast<std::size_t>(c)]) return true;
    return false;
}

std::set<std::string> parents(const Scg& g, std::string_view v) {
    std::set<std::string> out;
    for (SeriesIdx p : g.parents(g.index(v))) out.insert(g.name(p));
    return out;
}

std::set<std::string> descendants(const Scg& g, std::string_view v, bool strict) {
    return to_names(g, descendant_mask(g, g.index(v), strict));
}

std::set<std::string> ancestors(const Scg& g, std::string_view v, bool strict) {
    return to_names(g, ancestor_mask(g, g.index(v), strict));
}

bool has_big_cycle(const Scg& g, std::string_view v) { return has_big_cycle(g, g.index(v)); }

Scg induced_subgraph(const Scg& g, const std::set<std::string>& keep) {
    std::vector<char> in(g.size(), 0);
    for (const auto& k : keep) in[static_cast<std::size_t>(g.index(k))] = 1;
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : g.edges())
        if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)]) edges.emplace_back(g.name(a), g.name(b));
    return Scg(std::vector<std::string>(keep.begin(), keep.end()), edges);
}

}  // namespace tsibc
