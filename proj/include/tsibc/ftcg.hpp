#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tsibc/scg.hpp"
#include "tsibc/temporal.hpp"

namespace tsibc {

// Finite-window full-time causal graph. Vertices are every (series, time)
// with time inside the window; ids are (time - lo) * n + series.
class Ftcg {
public:
    Ftcg(std::shared_ptr<const std::vector<std::string>> series, Window window);

    std::size_t series_count() const { return series_->size(); }
    const std::vector<std::string>& series_names() const { return *series_; }
    std::shared_ptr<const std::vector<std::string>> series_ptr() const { return series_; }
    Window window() const { return window_; }
    std::size_t vertex_count() const { return out_.size(); }

    bool contains(const TemporalVertex& v) const;
    int id(const TemporalVertex& v) const;  // throws OutOfWindow
    TemporalVertex vertex(int id) const;

    // Throws Error if the arrow goes back in time or is an unlagged self-cause.
    void add_edge(const TemporalVertex& a, const TemporalVertex& b);
    void remove_edge(int a, int b);
    bool has_edge(const TemporalVertex& a, const TemporalVertex& b) const;
    bool has_edge_id(int a, int b) const;

    const std::vector<int>& out(int id) const { return out_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& in(int id) const { return in_[static_cast<std::size_t>(id)]; }
    std::size_t edge_count() const;
    std::vector<std::pair<TemporalVertex, TemporalVertex>> edges() const;

    bool is_acyclic() const;
    // Throws Error describing the first violated invariant.
    void validate() const;

    std::vector<char> descendants(const std::vector<int>& sources) const;

    std::string label(const TemporalVertex& v) const;

    bool operator==(const Ftcg& o) const;

private:
    std::shared_ptr<const std::vector<std::string>> series_;
    Window window_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

std::shared_ptr<const std::vector<std::string>> series_names_of(const Scg& g);

Ftcg mutilate(const Ftcg& f, const std::set<TemporalVertex>& cut_incoming,
              const std::set<TemporalVertex>& cut_outgoing);

enum class Arrow { Forward, Backward };  // relative to path direction

// A path v0 - v1 - ... - vk; arrows[k] orients the edge between v_k and v_{k+1}.
struct PathF {
    std::vector<TemporalVertex> vertices;
    std::vector<Arrow> arrows;

    bool empty() const { return vertices.empty(); }
    bool operator==(const PathF&) const = default;
};

// True iff the path is simple, every step is an edge of f in the stated
// orientation, the first arrow points into the first vertex, and no inner
// vertex is a collider.
bool is_collider_free_backdoor(const Ftcg& f, const PathF& p);
bool is_valid_path(const Ftcg& f, const PathF& p);

std::string path_to_string(const std::vector<std::string>& names, const PathF& p);

}  // namespace tsibc
