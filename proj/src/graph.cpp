#include "dompoly/graph.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace dompoly {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InvalidParameterError("graph with negative vertex count");
    if (n > kMaxVertices)
        throw CapacityError("graph with " + std::to_string(n) + " vertices exceeds capacity " +
                            std::to_string(kMaxVertices));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw InvalidParameterError(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

long Graph::edge_count() const {
    long deg = 0;
    for (auto m : adj_) deg += vcount(m);
    return deg / 2;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(VertexSet w) const {
    VertexSet out = w;
    for (VertexSet rest = w; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        check_vertex(v, "closed_neighborhood");
        out |= adj_[static_cast<std::size_t>(v)];
    }
    return out;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw InvalidParameterError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= vbit(v);
    adj_[static_cast<std::size_t>(v)] |= vbit(u);
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    check_vertex(v, "label");
    if (labels_.empty()) return empty;
    return labels_[static_cast<std::size_t>(v)];
}

void Graph::set_label(int v, std::string s) {
    check_vertex(v, "set_label");
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[static_cast<std::size_t>(v)] = std::move(s);
}

Graph path_graph(int n) {
    if (n < 0) throw InvalidParameterError("path with negative length");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidParameterError("cycle requires n >= 3, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int r) {
    if (r < 0) throw InvalidParameterError("complete graph with negative size");
    Graph g(r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int m, int t) {
    if (m < 0 || t < 0) throw InvalidParameterError("complete bipartite with negative side");
    Graph g(m + t);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < t; ++j) g.add_edge(i, m + j);
    return g;
}

Graph read_edge_list(std::istream& in) {
    auto strip = [](std::string line) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        return line;
    };
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip(line));
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue;  // blank / comment-only line
            if (tag != "n" || !(ls >> n) || n < 0)
                throw ParseError("edge list must start with 'n <count>'", lineno);
            g = Graph(n);
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) throw ParseError("edge line needs two endpoints", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range", lineno);
        if (u == v) throw ParseError("self-loop not allowed in a simple graph", lineno);
        g.add_edge(u, v);
    }
    if (n < 0) throw ParseError("edge list missing 'n <count>' header", lineno);
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameterError("cannot open edge list file: " + path);
    return read_edge_list(in);
}

std::pair<Graph, ProductVertexMap> graph_product(ProductKind kind, const Graph& g,
                                                 const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    const long total = static_cast<long>(ng) * nh;
    if (total > kMaxVertices)
        throw CapacityError("product has " + std::to_string(total) +
                            " vertices, exceeding capacity " + std::to_string(kMaxVertices));
    ProductVertexMap map{ng, nh};
    Graph p(static_cast<int>(total));
    for (int u1 = 0; u1 < ng; ++u1)
        for (int v1 = 0; v1 < nh; ++v1) {
            const int a = map.index(u1, v1);
            p.set_label(a, "(" + std::to_string(u1) + "," + std::to_string(v1) + ")");
            for (int u2 = u1; u2 < ng; ++u2)
                for (int v2 = 0; v2 < nh; ++v2) {
                    const int b = map.index(u2, v2);
                    if (b <= a) continue;
                    const bool eg = g.adjacent(u1, u2), eh = h.adjacent(v1, v2);
                    bool edge = false;
                    switch (kind) {
                        case ProductKind::Cartesian:
                            edge = (u1 == u2 && eh) || (eg && v1 == v2);
                            break;
                        case ProductKind::Strong:
                            edge = (u1 == u2 && eh) || (eg && v1 == v2) || (eg && eh);
                            break;
                        case ProductKind::Tensor:
                            edge = eg && eh;
                            break;
                    }
                    if (edge) p.add_edge(a, b);
                }
        }
    return {std::move(p), map};
}

std::pair<Graph, ProductVertexMap> cartesian_product(const Graph& g, const Graph& h) {
    return graph_product(ProductKind::Cartesian, g, h);
}
std::pair<Graph, ProductVertexMap> strong_product(const Graph& g, const Graph& h) {
    return graph_product(ProductKind::Strong, g, h);
}
std::pair<Graph, ProductVertexMap> tensor_product(const Graph& g, const Graph& h) {
    return graph_product(ProductKind::Tensor, g, h);
}

DeletionResult delete_vertices(const Graph& g, VertexSet s) {
    const int n = g.vertex_count();
    if (s & ~g.full_set())
        throw InvalidParameterError("delete_vertices: set contains out-of-range vertices");
    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!vcontains(s, v)) old_to_new[static_cast<std::size_t>(v)] = next++;
    Graph out(next);
    for (int u = 0; u < n; ++u) {
        const int nu = old_to_new[static_cast<std::size_t>(u)];
        if (nu < 0) continue;
        for (VertexSet rest = g.neighbors(u); rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int nv = old_to_new[static_cast<std::size_t>(v)];
            if (nv > nu) out.add_edge(nu, nv);
        }
    }
    return {std::move(out), std::move(old_to_new)};
}

Graph contract_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw InvalidParameterError("contract_vertex: vertex out of range");
    const VertexSet nb = g.neighbors(v);
    auto [out, old_to_new] = delete_vertices(g, vbit(v));
    for (VertexSet ra = nb; ra;) {
        int a = std::countr_zero(ra);
        ra &= ra - 1;
        for (VertexSet rb = ra; rb;) {
            int b = std::countr_zero(rb);
            rb &= rb - 1;
            out.add_edge(old_to_new[static_cast<std::size_t>(a)],
                         old_to_new[static_cast<std::size_t>(b)]);
        }
    }
    return out;
}

JwResult build_jw(const Graph& g, VertexSet w) {
    if (w & ~g.full_set()) throw InvalidParameterError("build_jw: W contains invalid vertices");
    const VertexSet nw_closed = g.closed_neighborhood(w);
    const VertexSet outside = g.full_set() & ~nw_closed;
    // z's neighbors: W together with N(V \ N[W]), kept inside N[W] since only
    // N[W] survives into J_W.
    const VertexSet z_targets = (w | g.open_neighborhood(outside)) & nw_closed;

    auto [induced, old_to_new] = delete_vertices(g, ~nw_closed & g.full_set());
    const int k = induced.vertex_count();
    Graph j(k + 1);
    for (int u = 0; u < g.vertex_count(); ++u) {
        const int nu = old_to_new[static_cast<std::size_t>(u)];
        if (nu < 0) continue;
        for (VertexSet rest = g.neighbors(u) & nw_closed; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int nv = old_to_new[static_cast<std::size_t>(v)];
            if (nv > nu) j.add_edge(nu, nv);
        }
    }
    for (VertexSet rest = z_targets; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        j.add_edge(old_to_new[static_cast<std::size_t>(v)], k);
    }
    return {std::move(j), k, std::move(old_to_new)};
}

}  // namespace dompoly
