#include "conet/graph.hpp"

#include "conet/error.hpp"
#include "conet/io_util.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace conet {

namespace {

std::uint64_t pack_pair(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

std::uint32_t CooccurGraph::intern(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    auto idx = static_cast<std::uint32_t>(ids_.size());
    ids_.push_back(id);
    mention_count_.push_back(0);
    index_.emplace(id, idx);
    return idx;
}

void CooccurGraph::add_document(const std::set<std::string>& concepts) {
    ++doc_count_;
    std::vector<std::uint32_t> nodes;
    nodes.reserve(concepts.size());
    for (const auto& id : concepts) {
        std::uint32_t idx = intern(id);
        ++mention_count_[idx];
        nodes.push_back(idx);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            ++edge_weight_[pack_pair(nodes[i], nodes[j])];
        }
    }
}

std::int64_t CooccurGraph::mention_count(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? 0 : mention_count_[it->second];
}

std::int64_t CooccurGraph::weight(const std::string& u, const std::string& w) const {
    auto iu = index_.find(u);
    auto iw = index_.find(w);
    if (iu == index_.end() || iw == index_.end()) return 0;
    auto it = edge_weight_.find(pack_pair(iu->second, iw->second));
    return it == edge_weight_.end() ? 0 : it->second;
}

bool CooccurGraph::operator==(const CooccurGraph& other) const {
    if (doc_count_ != other.doc_count_ || ids_.size() != other.ids_.size() ||
        edge_weight_.size() != other.edge_weight_.size()) {
        return false;
    }
    for (const auto& id : ids_) {
        if (mention_count(id) != other.mention_count(id)) return false;
    }
    for (const auto& [key, v] : edge_weight_) {
        const auto& u_id = ids_[static_cast<std::uint32_t>(key >> 32)];
        const auto& w_id = ids_[static_cast<std::uint32_t>(key & 0xFFFFFFFFu)];
        if (other.weight(u_id, w_id) != v) return false;
    }
    return true;
}

std::set<std::string> top_n_persons(const CooccurGraph& graph, std::size_t n) {
    std::vector<std::uint32_t> order(graph.node_count());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    const auto& ids = graph.node_ids();
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        std::int64_t ca = graph.mention_count_at(a);
        std::int64_t cb = graph.mention_count_at(b);
        if (ca != cb) return ca > cb;
        return ids[a] < ids[b];
    });
    std::set<std::string> out;
    for (std::size_t i = 0; i < order.size() && i < n; ++i) {
        out.insert(ids[order[i]]);
    }
    return out;
}

GraphView::GraphView(const CooccurGraph& graph, std::int64_t min_weight,
                     const std::optional<std::set<std::string>>& whitelist) {
    doc_count_ = graph.doc_count();

    const auto& graph_ids = graph.node_ids();
    std::vector<std::uint32_t> keep; // graph indices of view nodes
    for (std::uint32_t i = 0; i < graph_ids.size(); ++i) {
        if (!whitelist || whitelist->count(graph_ids[i])) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::uint32_t a, std::uint32_t b) {
        return graph_ids[a] < graph_ids[b];
    });

    ids_.reserve(keep.size());
    std::unordered_map<std::uint32_t, std::uint32_t> to_view;
    to_view.reserve(keep.size());
    for (std::uint32_t v = 0; v < keep.size(); ++v) {
        to_view.emplace(keep[v], v);
        ids_.push_back(graph_ids[keep[v]]);
    }

    for (const auto& [key, weight] : graph.edge_weights()) {
        if (weight < min_weight) continue;
        auto a = to_view.find(static_cast<std::uint32_t>(key >> 32));
        if (a == to_view.end()) continue;
        auto b = to_view.find(static_cast<std::uint32_t>(key & 0xFFFFFFFFu));
        if (b == to_view.end()) continue;
        ViewEdge e;
        e.u = std::min(a->second, b->second);
        e.w = std::max(a->second, b->second);
        e.weight = weight;
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(), [](const ViewEdge& a, const ViewEdge& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.u != b.u) return a.u < b.u;
        return a.w < b.w;
    });
    build_adjacency();
}

GraphView GraphView::from_edges(std::vector<std::string> ids,
                                std::vector<ViewEdge> edges, std::int64_t doc_count) {
    GraphView view;
    view.ids_ = std::move(ids);
    view.edges_ = std::move(edges);
    view.doc_count_ = doc_count;
    std::sort(view.edges_.begin(), view.edges_.end(),
              [](const ViewEdge& a, const ViewEdge& b) {
                  if (a.weight != b.weight) return a.weight > b.weight;
                  if (a.u != b.u) return a.u < b.u;
                  return a.w < b.w;
              });
    view.build_adjacency();
    return view;
}

void GraphView::build_adjacency() {
    adjacency_.assign(ids_.size(), {});
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.w);
        adjacency_[e.w].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool GraphView::has_edge(std::uint32_t u, std::uint32_t w) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), w);
}

std::int64_t GraphView::max_weight() const {
    if (edges_.empty()) {
        throw UndefinedError("max edge weight undefined on an edgeless view");
    }
    return edges_.front().weight; // edges sorted by weight descending
}

GraphView noise_filter(const CooccurGraph& graph, std::int64_t min_weight) {
    return GraphView(graph, min_weight);
}

std::int64_t max_weight(const GraphView& view) { return view.max_weight(); }

void write_edge_list(const GraphView& view, const std::filesystem::path& path) {
    atomic_write(path, [&](std::ostream& out) {
        for (const auto& e : view.edges()) {
            out << view.node_ids()[e.u] << '\t' << view.node_ids()[e.w] << '\t'
                << e.weight << '\n';
        }
    });
}

void write_node_list(const GraphView& view, const CooccurGraph& graph,
                     const std::filesystem::path& path) {
    atomic_write(path, [&](std::ostream& out) {
        for (const auto& id : view.node_ids()) {
            out << id << '\t' << graph.mention_count(id) << '\n';
        }
    });
}

GraphView read_edge_list(const std::filesystem::path& path,
                         const std::vector<std::string>& extra_ids) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list: " + path.string());

    std::set<std::string> id_set(extra_ids.begin(), extra_ids.end());
    struct RawEdge {
        std::string u, w;
        std::int64_t weight;
    };
    std::vector<RawEdge> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        RawEdge e;
        if (!std::getline(ss, e.u, '\t') || !std::getline(ss, e.w, '\t') ||
            !(ss >> e.weight)) {
            throw ParseError(path.string(), line_no,
                             "expected \"u<TAB>w<TAB>weight\"");
        }
        if (e.u == e.w) {
            throw ParseError(path.string(), line_no, "self-edge not allowed");
        }
        if (e.weight < 1) {
            throw ParseError(path.string(), line_no, "edge weight must be >= 1");
        }
        id_set.insert(e.u);
        id_set.insert(e.w);
        raw.push_back(std::move(e));
    }

    std::vector<std::string> ids(id_set.begin(), id_set.end());
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

    std::vector<ViewEdge> edges;
    edges.reserve(raw.size());
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& e : raw) {
        ViewEdge v;
        v.u = std::min(index[e.u], index[e.w]);
        v.w = std::max(index[e.u], index[e.w]);
        v.weight = e.weight;
        if (!seen.emplace(v.u, v.w).second) {
            throw ParseError(path.string(), 0,
                             "duplicate edge " + e.u + " -- " + e.w);
        }
        edges.push_back(v);
    }
    return GraphView::from_edges(std::move(ids), std::move(edges), 0);
}

} // namespace conet
