#ifndef EMBKIT_SIMPLICIAL_COMPLEX_HPP
#define EMBKIT_SIMPLICIAL_COMPLEX_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "embkit/errors.hpp"

namespace embkit {

using Vertex = int;

/// An abstract simplex: a strictly increasing tuple of nonnegative vertex
/// labels. Dimension = number of vertices - 1.
class Simplex {
  public:
    Simplex() = default;
    explicit Simplex(std::vector<Vertex> verts);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<Vertex>& vertices() const { return verts_; }
    Vertex operator[](std::size_t i) const { return verts_[i]; }
    std::size_t size() const { return verts_.size(); }

    bool contains(Vertex v) const;
    bool disjoint_from(const Simplex& other) const;
    bool is_face_of(const Simplex& other) const;

    /// The facet obtained by deleting the i-th vertex (0-based).
    Simplex facet_omitting(std::size_t i) const;

    /// If *this is a facet of `cofacet`, the position of the omitted vertex;
    /// -1 otherwise.
    int omitted_index_in(const Simplex& cofacet) const;

    std::string str() const;

    auto operator<=>(const Simplex& other) const { return verts_ <=> other.verts_; }
    bool operator==(const Simplex& other) const = default;

  private:
    std::vector<Vertex> verts_;
};

/// A finite abstract simplicial complex, stored as the full face-closed
/// simplex set grouped by dimension. Immutable after construction; vertex
/// labels are ordered numerically.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Face closure of the given maximal faces. Every face must be nonempty
    /// with nonnegative labels; an empty face list is rejected.
    static SimplicialComplex from_maximal_faces(const std::vector<std::vector<Vertex>>& faces);

    static SimplicialComplex from_simplices(const std::set<std::vector<Vertex>>& closed_set);

    /// Dimension of the complex; -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    bool empty() const { return by_dim_.empty(); }

    /// Simplices of dimension d, sorted lexicographically. Empty if d is out
    /// of range.
    const std::vector<Simplex>& simplices(int d) const;

    std::size_t count(int d) const { return simplices(d).size(); }
    std::size_t total_simplices() const;

    bool contains(const Simplex& s) const;
    bool contains_vertex(Vertex v) const;

    /// Vertex labels in increasing order.
    std::vector<Vertex> vertices() const;

    /// 1-based rank of v in the sorted vertex list; throws if absent.
    int vertex_rank(Vertex v) const;

    /// Maximal simplices (faces not properly contained in another simplex).
    std::vector<Simplex> facets() const;

    bool operator==(const SimplicialComplex& other) const = default;

  private:
    // by_dim_[d] holds the d-simplices in lexicographic order.
    std::vector<std::vector<Simplex>> by_dim_;
};

struct Graph {
    std::set<Vertex> vertices;
    std::set<std::pair<Vertex, Vertex>> edges; // normalized first < second

    void add_vertex(Vertex v) { vertices.insert(v); }
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

/// All simplices of dimension <= j.
SimplicialComplex skeleton(const SimplicialComplex& K, int j);

/// Link of vertex v: { s : s u {v} in K, v not in s }.
SimplicialComplex link(const SimplicialComplex& K, Vertex v);

/// First barycentric subdivision. Original vertices keep their labels; every
/// face of dimension >= 1 receives a fresh label, allocated in lexicographic
/// order of the subdivided faces starting above the current maximum label.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& K);

int euler_characteristic(const SimplicialComplex& K);

/// All ordered pairs (s, t) of vertex-disjoint simplices with dim s = a and
/// dim t = b, sorted lexicographically by (s, t).
std::vector<std::pair<Simplex, Simplex>> disjoint_pairs(const SimplicialComplex& K, int a, int b);

Graph one_skeleton_graph(const SimplicialComplex& K);

/// Dual graph of a complex of dimension <= 2: one vertex per triangle
/// (labelled by its index in lexicographic order), edges between triangles
/// sharing an edge.
Graph dual_triangle_graph(const SimplicialComplex& K);

} // namespace embkit

#endif
