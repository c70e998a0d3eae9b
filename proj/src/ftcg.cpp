#include "tsibc/ftcg.hpp"

#include <algorithm>
#include <deque>

#include "tsibc/errors.hpp"

namespace tsibc {

Ftcg::Ftcg(std::shared_ptr<const std::vector<std::string>> series, Window window)
    : series_(std::move(series)), window_(window) {
    if (window.hi < window.lo) throw Error("empty window");
    std::size_t n = series_->size() * static_cast<std::size_t>(window.length());
    out_.assign(n, {});
    in_.assign(n, {});
}

bool Ftcg::contains(const TemporalVertex& v) const {
    return v.series >= 0 && static_cast<std::size_t>(v.series) < series_count() && window_.contains(v.time);
}

int Ftcg::id(const TemporalVertex& v) const {
    if (!contains(v))
        throw OutOfWindow("vertex (" + std::to_string(v.series) + ", " + std::to_string(v.time) + ") outside window");
    return static_cast<int>((v.time - window_.lo) * static_cast<std::int64_t>(series_count()) + v.series);
}

TemporalVertex Ftcg::vertex(int id) const {
    auto n = static_cast<int>(series_count());
    return {static_cast<SeriesIdx>(id % n), window_.lo + id / n};
}

void Ftcg::add_edge(const TemporalVertex& a, const TemporalVertex& b) {
    if (a.time > b.time) throw Error("arrow " + label(a) + " -> " + label(b) + " goes back in time");
    if (a.series == b.series && a.time == b.time)
        throw Error("self-cause " + label(a) + " must be lagged");
    int ia = id(a);
    int ib = id(b);
    auto& o = out_[static_cast<std::size_t>(ia)];
    auto pos = std::lower_bound(o.begin(), o.end(), ib);
    if (pos != o.end() && *pos == ib) return;
    o.insert(pos, ib);
    auto& i = in_[static_cast<std::size_t>(ib)];
    i.insert(std::lower_bound(i.begin(), i.end(), ia), ia);
}

void Ftcg::remove_edge(int a, int b) {
    auto& o = out_[static_cast<std::size_t>(a)];
    o.erase(std::remove(o.begin(), o.end(), b), o.end());
    auto& i = in_[static_cast<std::size_t>(b)];
    i.erase(std::remove(i.begin(), i.end(), a), i.end());
}

bool Ftcg::has_edge_id(int a, int b) const {
    const auto& o = out_[static_cast<std::size_t>(a)];
    return std::binary_search(o.begin(), o.end(), b);
}

bool Ftcg::has_edge(const TemporalVertex& a, const TemporalVertex& b) const {
    if (!contains(a) || !contains(b)) return false;
    return has_edge_id(id(a), id(b));
}

std::size_t Ftcg::edge_count() const {
    std::size_t n = 0;
    for (const auto& o : out_) n += o.size();
    return n;
}

std::vector<std::pair<TemporalVertex, TemporalVertex>> Ftcg::edges() const {
    std::vector<std::pair<TemporalVertex, TemporalVertex>> e;
    for (std::size_t a = 0; a < out_.size(); ++a)
        for (int b : out_[a]) e.emplace_back(vertex(static_cast<int>(a)), vertex(b));
    std::sort(e.begin(), e.end());
    return e;
}

bool Ftcg::is_acyclic() const {
    std::vector<int> indeg(out_.size(), 0);
    for (const auto& o : out_)
        for (int b : o) ++indeg[static_cast<std::size_t>(b)];
    std::vector<int> stack;
    for (std::size_t v = 0; v < indeg.size(); ++v)
        if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
    std::size_t done = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++done;
        for (int w : out_[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
    }
    return done == out_.size();
}

void Ftcg::validate() const {
    for (std::size_t a = 0; a < out_.size(); ++a) {
        auto va = vertex(static_cast<int>(a));
        for (int b : out_[a]) {
            auto vb = vertex(b);
            if (va.time > vb.time) throw Error("arrow " + label(va) + " -> " + label(vb) + " goes back in time");
            if (va.series == vb.series && va.time == vb.time) throw Error("self-cause must be lagged");
        }
    }
    if (!is_acyclic()) throw Error("FTCG contains a cycle");
}

std::vector<char> Ftcg::descendants(const std::vector<int>& sources) const {
    std::vector<char> seen(out_.size(), 0);
    std::deque<int> queue;
    for (int s : sources) {
        if (!seen[static_cast<std::size_t>(s)]) {
            seen[static_cast<std::size_t>(s)] = 1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : out_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

std::string Ftcg::label(const TemporalVertex& v) const {
    std::string s = (v.series >= 0 && static_cast<std::size_t>(v.series) < series_count())
                        ? (*series_)[static_cast<std::size_t>(v.series)]
                        : "?";
    return s + "_" + std::to_string(v.time);
}

bool Ftcg::operator==(const Ftcg& o) const {
    return *series_ == *o.series_ && window_ == o.window_ && out_ == o.out_;
}

std::shared_ptr<const std::vector<std::string>> series_names_of(const Scg& g) {
    return std::make_shared<const std::vector<std::string>>(g.names());
}

Ftcg mutilate(const Ftcg& f, const std::set<TemporalVertex>& cut_incoming,
              const std::set<TemporalVertex>& cut_outgoing) {
    Ftcg g = f;
    for (const auto& v : cut_incoming) {
        int id = f.id(v);
        for (int p : f.in(id)) g.remove_edge(p, id);
    }
    for (const auto& v : cut_outgoing) {
        int id = f.id(v);
        for (int c : f.out(id)) g.remove_edge(id, c);
    }
    return g;
}

bool is_valid_path(const Ftcg& f, const PathF& p) {
    if (p.vertices.empty() || p.arrows.size() + 1 != p.vertices.size()) return false;
    std::set<TemporalVertex> seen;
    for (const auto& v : p.vertices) {
        if (!f.contains(v) || !seen.insert(v).second) return false;
    }
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        const auto& a = p.vertices[k];
        const auto& b = p.vertices[k + 1];
        bool ok = p.arrows[k] == Arrow::Forward ? f.has_edge(a, b) : f.has_edge(b, a);
        if (!ok) return false;
    }
    return true;
}

bool is_collider_free_backdoor(const Ftcg& f, const PathF& p) {
    if (!is_valid_path(f, p) || p.arrows.empty()) return false;
    if (p.arrows.front() != Arrow::Backward) return false;
    for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k)
        if (p.arrows[k] == Arrow::Forward && p.arrows[k + 1] == Arrow::Backward) return false;
    return true;
}

std::string path_to_string(const std::vector<std::string>& names, const PathF& p) {
    std::string s;
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
        const auto& v = p.vertices[k];
        s += names[static_cast<std::size_t>(v.series)] + "_" + std::to_string(v.time);
        if (k < p.arrows.size()) s += p.arrows[k] == Arrow::Forward ? " -> " : " <- ";
    }
    return s;
}

}  // namespace tsibc
