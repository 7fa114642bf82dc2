#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tetdual {

using VertexId = std::uint32_t;
/// Dense per-dimension index of a simplex inside a Complex3.
using SimplexId = std::uint32_t;

using Tet = std::array<VertexId, 4>;
using Triangle = std::array<VertexId, 3>;
using Edge = std::array<VertexId, 2>;

/// A simplex given by 1..4 strictly increasing vertex ids.
class Simplex {
public:
    Simplex() = default;
    /// Sorts the vertices; throws InvalidParameter on repeats or bad size.
    Simplex(std::initializer_list<VertexId> vertices);
    explicit Simplex(std::span<const VertexId> vertices);

    int dim() const { return static_cast<int>(size_) - 1; }
    std::span<const VertexId> vertices() const { return {v_.data(), size_}; }
    VertexId operator[](std::size_t i) const { return v_[i]; }
    bool contains(VertexId v) const;

    auto operator<=>(const Simplex&) const = default;

private:
    std::array<VertexId, 4> v_{};
    std::uint8_t size_ = 0;
};

std::string to_string(const Simplex& s);

enum class ValidationFailure {
    None,
    TriangleCofaces,  // a triangle without exactly two cofacet tets
    EdgeLink,         // an edge link that is not one closed cycle
    VertexLink,       // a vertex link that is not a connected closed surface with chi = 2
    Disconnected,     // more than one component, or an isolated vertex
};

struct ValidationReport {
    bool ok = true;
    ValidationFailure failure = ValidationFailure::None;
    std::string witness; // first witness of failure, empty on success

    explicit operator bool() const { return ok; }
};

/// Immutable tetrahedral complex with canonical sorted simplex lists and
/// all incidence tables between dimensions. Vertices are 0..num_vertices-1.
class Complex3 {
public:
    /// Builds the complex from tetrahedra. Each tuple is sorted; the stored
    /// tet list is sorted lexicographically. `num_vertices` defaults to one
    /// past the largest id used.
    static Complex3 build(std::span<const Tet> tets, std::optional<std::size_t> num_vertices = {});

    std::size_t count(int dim) const { return counts_[static_cast<std::size_t>(dim)]; }
    std::size_t num_vertices() const { return counts_[0]; }
    std::size_t num_edges() const { return counts_[1]; }
    std::size_t num_triangles() const { return counts_[2]; }
    std::size_t num_tets() const { return counts_[3]; }

    const Edge& edge(SimplexId id) const { return edges_[id]; }
    const Triangle& triangle(SimplexId id) const { return triangles_[id]; }
    const Tet& tet(SimplexId id) const { return tets_[id]; }
    Simplex simplex(int dim, SimplexId id) const;

    std::optional<SimplexId> find_edge(VertexId a, VertexId b) const;
    std::optional<SimplexId> find_triangle(VertexId a, VertexId b, VertexId c) const;
    std::optional<SimplexId> find_tet(VertexId a, VertexId b, VertexId c, VertexId d) const;
    std::optional<SimplexId> find(const Simplex& s) const;
    /// As find, but throws UnknownSimplex.
    SimplexId id_of(const Simplex& s) const;

    /// Codimension-one faces. For a tet, entry i is the triangle opposite its
    /// i-th vertex; likewise for a triangle's edges. Edges return vertex ids.
    std::span<const SimplexId> facets(int dim, SimplexId id) const;
    /// The six edges of a tet, in order 01 02 03 12 13 23 of its local vertices.
    std::span<const SimplexId> tet_edges(SimplexId tet) const;

    /// The sorted list of (dim + up)-simplices containing the given simplex.
    std::span<const SimplexId> cofaces(int dim, SimplexId id, int up) const;

    /// Local position (0..3) of v inside the tet, or -1.
    int local_index(SimplexId tet, VertexId v) const;

    /// Result of the closed-manifold check, computed once at construction.
    const ValidationReport& validation() const { return validation_; }
    bool is_closed_manifold() const { return validation_.ok; }

    long euler_characteristic() const;

private:
    struct Incidence {
        std::vector<std::uint32_t> offsets;
        std::vector<SimplexId> items;
        std::span<const SimplexId> at(SimplexId id) const
        {
            return {items.data() + offsets[id], items.data() + offsets[id + 1]};
        }
    };

    void build_incidence();
    ValidationReport run_validation() const;

    std::array<std::size_t, 4> counts_{};
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    std::vector<Tet> tets_;
    std::vector<SimplexId> edge_vertices_;  // 2 per edge
    std::vector<SimplexId> triangle_edges_; // 3 per triangle
    std::vector<SimplexId> tet_triangles_;  // 4 per tet
    std::vector<SimplexId> tet_edges_;      // 6 per tet
    // indexed by dim*3 + (up-1)
    std::array<Incidence, 9> incidence_;
    ValidationReport validation_;
};

ValidationReport validate_closed_manifold(const Complex3& c);

/// Tets containing s. Throws UnknownSimplex.
std::vector<SimplexId> star(const Complex3& c, const Simplex& s);
/// Triangles of the boundary of the vertex star that avoid v.
std::vector<SimplexId> link(const Complex3& c, VertexId v);
/// Triangles of the boundary of the vertex star that contain v.
std::vector<SimplexId> incident_boundary(const Complex3& c, VertexId v);
/// The three faces of `tet` containing v, sorted by id.
std::array<SimplexId, 3> incident_faces(const Complex3& c, VertexId v, SimplexId tet);

/// Boundary of the 4-simplex on vertices 0..4.
Complex3 gen_s3();
/// Periodic q x q x q grid, six Freudenthal tets per cube, vertex x + q y + q^2 z.
Complex3 gen_t3(int q);
/// Vertex id of grid point (x, y, z) in gen_t3(q), coordinates taken mod q.
VertexId t3_vertex(int q, int x, int y, int z);

} // namespace tetdual
