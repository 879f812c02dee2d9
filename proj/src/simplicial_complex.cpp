#include "embkit/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace embkit {

Simplex::Simplex(std::vector<Vertex> verts) : verts_(std::move(verts)) {
    if (verts_.empty())
        throw precondition_error("simplex must have at least one vertex");
    std::sort(verts_.begin(), verts_.end());
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i] < 0)
            throw precondition_error("vertex labels must be nonnegative");
        if (i > 0 && verts_[i] == verts_[i - 1])
            throw precondition_error("duplicate vertex in simplex: " + std::to_string(verts_[i]));
    }
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::disjoint_from(const Simplex& other) const {
    // both sorted: single merge pass
    std::size_t i = 0, j = 0;
    while (i < verts_.size() && j < other.verts_.size()) {
        if (verts_[i] == other.verts_[j]) return false;
        if (verts_[i] < other.verts_[j]) ++i; else ++j;
    }
    return true;
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(),
                         verts_.begin(), verts_.end());
}

Simplex Simplex::facet_omitting(std::size_t i) const {
    std::vector<Vertex> v = verts_;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    Simplex s;
    s.verts_ = std::move(v); // already sorted and distinct
    return s;
}

int Simplex::omitted_index_in(const Simplex& cofacet) const {
    if (verts_.size() + 1 != cofacet.verts_.size()) return -1;
    int omitted = -1;
    std::size_t i = 0;
    for (std::size_t j = 0; j < cofacet.verts_.size(); ++j) {
        if (i < verts_.size() && verts_[i] == cofacet.verts_[j]) {
            ++i;
        } else if (omitted < 0) {
            omitted = static_cast<int>(j);
        } else {
            return -1;
        }
    }
    return i == verts_.size() ? omitted : -1;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ' ';
        os << verts_[i];
    }
    os << ']';
    return os.str();
}

namespace {

// Insert every nonempty subset of `face` (sorted, distinct) into `out`.
void close_under_faces(const std::vector<Vertex>& face, std::set<std::vector<Vertex>>& out) {
    const std::size_t n = face.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Vertex> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(face[i]);
        out.insert(std::move(sub));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_maximal_faces(const std::vector<std::vector<Vertex>>& faces) {
    if (faces.empty())
        throw precondition_error("complex requires at least one face");
    std::set<std::vector<Vertex>> closed;
    for (const auto& f : faces) {
        Simplex s(f); // validates nonempty, nonnegative, distinct
        close_under_faces(s.vertices(), closed);
    }
    return from_simplices(closed);
}

SimplicialComplex SimplicialComplex::from_simplices(const std::set<std::vector<Vertex>>& closed_set) {
    SimplicialComplex K;
    for (const auto& v : closed_set) {
        Simplex s(v);
        const int d = s.dim();
        if (d >= static_cast<int>(K.by_dim_.size()))
            K.by_dim_.resize(static_cast<std::size_t>(d) + 1);
        K.by_dim_[static_cast<std::size_t>(d)].push_back(std::move(s));
    }
    for (auto& level : K.by_dim_)
        std::sort(level.begin(), level.end());
    return K;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> kEmpty;
    if (d < 0 || d > dimension()) return kEmpty;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::total_simplices() const {
    std::size_t n = 0;
    for (const auto& level : by_dim_) n += level.size();
    return n;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    const auto& level = simplices(s.dim());
    return std::binary_search(level.begin(), level.end(), s);
}

bool SimplicialComplex::contains_vertex(Vertex v) const {
    return contains(Simplex({v}));
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> out;
    out.reserve(count(0));
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
}

int SimplicialComplex::vertex_rank(Vertex v) const {
    const auto& zs = simplices(0);
    const Simplex probe({v});
    auto it = std::lower_bound(zs.begin(), zs.end(), probe);
    if (it == zs.end() || !(*it == probe))
        throw precondition_error("vertex not in complex: " + std::to_string(v));
    return static_cast<int>(it - zs.begin()) + 1;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d) {
        for (const auto& s : simplices(d)) {
            bool maximal = true;
            // s is maximal iff no coface with one more vertex exists
            for (const auto& t : simplices(d + 1)) {
                if (s.is_face_of(t)) { maximal = false; break; }
            }
            if (maximal) out.push_back(s);
        }
    }
    return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw precondition_error("loop edge rejected");
    if (u > v) std::swap(u, v);
    vertices.insert(u);
    vertices.insert(v);
    edges.insert({u, v});
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) > 0;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int j) {
    if (j < 0) throw precondition_error("skeleton dimension must be >= 0");
    std::set<std::vector<Vertex>> kept;
    for (int d = 0; d <= std::min(j, K.dimension()); ++d)
        for (const auto& s : K.simplices(d))
            kept.insert(s.vertices());
    return SimplicialComplex::from_simplices(kept);
}

SimplicialComplex link(const SimplicialComplex& K, Vertex v) {
    if (!K.contains_vertex(v))
        throw precondition_error("link: vertex not in complex: " + std::to_string(v));
    std::set<std::vector<Vertex>> out;
    for (int d = 1; d <= K.dimension(); ++d) {
        for (const auto& s : K.simplices(d)) {
            if (!s.contains(v)) continue;
            std::vector<Vertex> rest;
            rest.reserve(s.size() - 1);
            for (Vertex w : s.vertices())
                if (w != v) rest.push_back(w);
            out.insert(std::move(rest));
        }
    }
    SimplicialComplex L = SimplicialComplex::from_simplices(out);
    return L;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
    if (K.empty()) return K;

    // Fresh labels for faces of dimension >= 1, in lexicographic face order.
    Vertex next = 0;
    for (Vertex v : K.vertices()) next = std::max(next, v);
    ++next;

    std::map<std::vector<Vertex>, Vertex> label;
    for (const auto& s : K.simplices(0))
        label[s.vertices()] = s[0];
    {
        std::vector<std::vector<Vertex>> faces;
        for (int d = 1; d <= K.dimension(); ++d)
            for (const auto& s : K.simplices(d))
                faces.push_back(s.vertices());
        std::sort(faces.begin(), faces.end());
        for (const auto& f : faces)
            label[f] = next++;
    }

    // Simplices of sd(K) = chains in the face poset. Enumerate chains by
    // extending each chain upward through proper cofaces.
    std::set<std::vector<Vertex>> out;
    std::vector<const Simplex*> chain;

    auto emit = [&]() {
        std::vector<Vertex> verts;
        verts.reserve(chain.size());
        for (const Simplex* s : chain)
            verts.push_back(label.at(s->vertices()));
        std::sort(verts.begin(), verts.end());
        out.insert(std::move(verts));
    };

    // Recursive chain extension; chains are short (length <= dim K + 1).
    auto extend = [&](auto&& self, const Simplex& top) -> void {
        chain.push_back(&top);
        emit();
        for (int d = top.dim() + 1; d <= K.dimension(); ++d) {
            for (const auto& t : K.simplices(d)) {
                if (top.is_face_of(t))
                    self(self, t);
            }
        }
        chain.pop_back();
    };
    for (int d = 0; d <= K.dimension(); ++d)
        for (const auto& s : K.simplices(d))
            extend(extend, s);

    return SimplicialComplex::from_simplices(out);
}

int euler_characteristic(const SimplicialComplex& K) {
    int chi = 0;
    for (int d = 0; d <= K.dimension(); ++d) {
        const int c = static_cast<int>(K.count(d));
        chi += (d % 2 == 0) ? c : -c;
    }
    return chi;
}

std::vector<std::pair<Simplex, Simplex>> disjoint_pairs(const SimplicialComplex& K, int a, int b) {
    std::vector<std::pair<Simplex, Simplex>> out;
    for (const auto& s : K.simplices(a))
        for (const auto& t : K.simplices(b))
            if (s.disjoint_from(t))
                out.emplace_back(s, t);
    // simplices(d) is lex sorted, so the double loop is already ordered
    return out;
}

Graph one_skeleton_graph(const SimplicialComplex& K) {
    Graph g;
    for (const auto& s : K.simplices(0)) g.add_vertex(s[0]);
    for (const auto& e : K.simplices(1)) g.add_edge(e[0], e[1]);
    return g;
}

Graph dual_triangle_graph(const SimplicialComplex& K) {
    if (K.dimension() > 2)
        throw precondition_error("dual_triangle_graph requires dim <= 2");
    const auto& tris = K.simplices(2);
    Graph g;
    for (std::size_t i = 0; i < tris.size(); ++i)
        g.add_vertex(static_cast<Vertex>(i));
    // adjacency via shared edge
    std::map<std::vector<Vertex>, std::vector<std::size_t>> edge_to_tris;
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j)
            edge_to_tris[tris[i].facet_omitting(j).vertices()].push_back(i);
    for (const auto& [edge, inc] : edge_to_tris)
        for (std::size_t x = 0; x < inc.size(); ++x)
            for (std::size_t y = x + 1; y < inc.size(); ++y)
                g.add_edge(static_cast<Vertex>(inc[x]), static_cast<Vertex>(inc[y]));
    return g;
}

} // namespace embkit
