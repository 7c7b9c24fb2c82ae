#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dompoly/errors.hpp"

namespace dompoly {

/// Subsets are single machine words, so every graph we build is capped here.
inline constexpr int kMaxVertices = 63;

/// Bitmask over the vertices of one specific graph.
using VertexSet = std::uint64_t;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline bool vcontains(VertexSet s, int v) { return (s >> v) & 1; }
inline int vcount(VertexSet s) { return std::popcount(s); }

/// Finite simple undirected graph on vertices 0..n-1, adjacency stored as
/// per-vertex neighbor bitmasks.  Immutable once built (builders below).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long edge_count() const;
    VertexSet full_set() const { return n_ == 0 ? 0 : (~VertexSet{0} >> (64 - n_)); }

    /// Open neighborhood N(v) as a mask.
    VertexSet neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const { return neighbors(v) | vbit(v); }
    bool adjacent(int u, int v) const { return vcontains(neighbors(u), v); }

    /// N[W] and N(W) = N[W] \ W for a vertex set.
    VertexSet closed_neighborhood(VertexSet w) const;
    VertexSet open_neighborhood(VertexSet w) const { return closed_neighborhood(w) & ~w; }

    void add_edge(int u, int v);  // rejects self-loops; duplicate edges are no-ops

    const std::string& label(int v) const;
    void set_label(int v, std::string s);
    bool has_labels() const { return !labels_.empty(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v, const char* what) const;
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

// ---- standard families ----
Graph path_graph(int n);
Graph cycle_graph(int n);  // requires n >= 3
Graph complete_graph(int r);
Graph complete_bipartite_graph(int m, int t);

/// Edge-list format: optional '#' comments, first line "n <count>", then one
/// "u v" per line (0-based).  Duplicate and reversed edges are normalized;
/// self-loops are a hard error.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Bijection product index <-> (left factor vertex, right factor vertex).
struct ProductVertexMap {
    int n_left = 0;
    int n_right = 0;
    int index(int u, int v) const { return u * n_right + v; }
    std::pair<int, int> factors(int i) const { return {i / n_right, i % n_right}; }
};

enum class ProductKind { Cartesian, Strong, Tensor };

/// Throws CapacityError when |V(G)|*|V(H)| > kMaxVertices.
std::pair<Graph, ProductVertexMap> graph_product(ProductKind kind, const Graph& g,
                                                 const Graph& h);
std::pair<Graph, ProductVertexMap> cartesian_product(const Graph& g, const Graph& h);
std::pair<Graph, ProductVertexMap> strong_product(const Graph& g, const Graph& h);
std::pair<Graph, ProductVertexMap> tensor_product(const Graph& g, const Graph& h);

struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
};

/// Induced subgraph on V \ s; remaining vertices reindexed densely in order.
DeletionResult delete_vertices(const Graph& g, VertexSet s);

/// Remove v and pairwise join its formerly non-adjacent neighbors.
Graph contract_vertex(const Graph& g, int v);

struct JwResult {
    Graph graph;
    int z;                        // index of the new apex vertex (always last)
    std::vector<int> old_to_new;  // G-index -> J_W-index, -1 outside N[W]
};

/// Induced subgraph of g on N[W] plus a new vertex z adjacent to
/// (W u N(V \ N[W])) intersected with N[W].
JwResult build_jw(const Graph& g, VertexSet w);

}  // namespace dompoly
