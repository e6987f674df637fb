// Weighted undirected co-occurrence graph over concept ids.
//
// Edge weight counts documents mentioning both endpoint concepts (not
// mention instances: a pair co-mentioned ten times in one document
// contributes 1). The builder is incremental over the document flow;
// snapshots are plain copies tagged with the document count D at which they
// were taken. Analyses run on GraphView, an immutable filtered projection
// (minimum edge weight, optional node whitelist) with nodes ordered
// lexicographically by id -- all downstream iteration is deterministic.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace conet {

class CooccurGraph {
public:
    // Consumes one document's deduplicated concept set: bumps D, every
    // concept's mention count, and every unordered pair's weight.
    void add_document(const std::set<std::string>& concepts);

    std::int64_t doc_count() const { return doc_count_; }
    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edge_weight_.size(); }

    // Mention count of a concept, 0 if absent.
    std::int64_t mention_count(const std::string& id) const;

    // Weight of an edge, 0 if absent; endpoint order irrelevant.
    std::int64_t weight(const std::string& u, const std::string& w) const;

    // Immutable copy tagged with the current D.
    CooccurGraph snapshot() const { return *this; }

    bool operator==(const CooccurGraph& other) const;

    // Internal dense indexing (insertion order); used by GraphView.
    const std::vector<std::string>& node_ids() const { return ids_; }
    std::int64_t mention_count_at(std::uint32_t index) const { return mention_count_[index]; }
    const std::unordered_map<std::uint64_t, std::int64_t>& edge_weights() const {
        return edge_weight_;
    }

private:
    std::uint32_t intern(const std::string& id);

    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::int64_t> mention_count_;
    std::unordered_map<std::uint64_t, std::int64_t> edge_weight_; // packed pair -> v
    std::int64_t doc_count_ = 0;
};

// The n concepts with the highest mention count; ties broken by
// lexicographic id order.
std::set<std::string> top_n_persons(const CooccurGraph& graph, std::size_t n);

struct ViewEdge {
    std::uint32_t u = 0; // view node indices, u < w
    std::uint32_t w = 0;
    std::int64_t weight = 0;

    bool operator==(const ViewEdge&) const = default;
};

class GraphView {
public:
    // Nodes: all graph nodes, or the whitelist intersection; kept even when
    // isolated. Edges: weight >= min_weight and both endpoints present.
    GraphView(const CooccurGraph& graph, std::int64_t min_weight = 1,
              const std::optional<std::set<std::string>>& whitelist = std::nullopt);

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::int64_t doc_count() const { return doc_count_; }

    const std::vector<std::string>& node_ids() const { return ids_; }

    // Edges sorted by (weight desc, u id asc, w id asc).
    const std::vector<ViewEdge>& edges() const { return edges_; }

    // Neighbor indices of a node, ascending.
    const std::vector<std::uint32_t>& neighbors(std::uint32_t node) const {
        return adjacency_[node];
    }

    std::size_t degree(std::uint32_t node) const { return adjacency_[node].size(); }
    bool has_edge(std::uint32_t u, std::uint32_t w) const;

    // Maximum edge weight v_max; UndefinedError on an edgeless view.
    std::int64_t max_weight() const;

    // A view of this view's edges with unit weights (used to wrap derived
    // binary graphs); shares no state with the source.
    static GraphView from_edges(std::vector<std::string> ids,
                                std::vector<ViewEdge> edges, std::int64_t doc_count);

private:
    GraphView() = default;
    void build_adjacency();

    std::vector<std::string> ids_; // sorted lexicographically
    std::vector<ViewEdge> edges_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::int64_t doc_count_ = 0;
};

// The paper's noise filter: drop edges below min_weight (default 2); nodes
// are retained even if the filter isolates them.
GraphView noise_filter(const CooccurGraph& graph, std::int64_t min_weight = 2);

std::int64_t max_weight(const GraphView& view);

// Edge list: "u<TAB>w<TAB>weight", sorted by (weight desc, u, w).
void write_edge_list(const GraphView& view, const std::filesystem::path& path);

// Node list: "id<TAB>mention_doc_count" for every view node.
void write_node_list(const GraphView& view, const CooccurGraph& graph,
                     const std::filesystem::path& path);

// Reads an edge list written by write_edge_list back into a GraphView.
// Extra ids (isolated nodes) may be supplied since the file format cannot
// carry them.
GraphView read_edge_list(const std::filesystem::path& path,
                         const std::vector<std::string>& extra_ids = {});

} // namespace conet
