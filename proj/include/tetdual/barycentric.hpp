#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "tetdual/mesh.hpp"

namespace tetdual {

/// Barycentric subdivision K' of a base complex. Vertex ids of the fine
/// complex are the barycenters of base simplices ordered by dimension:
/// vertices first, then edges, triangles and tets. A fine k-simplex is a
/// flag s_0 < s_1 < ... < s_k of proper face inclusions.
class BarycentricComplex {
public:
    explicit BarycentricComplex(Complex3 base);

    const Complex3& base() const { return base_; }
    const Complex3& fine() const { return fine_; }

    /// Fine vertex id of the barycenter of base simplex (dim, id).
    VertexId barycenter(int dim, SimplexId id) const { return offsets_[static_cast<std::size_t>(dim)] + id; }
    /// Base simplex carrying a fine vertex.
    std::pair<int, SimplexId> carrier(VertexId fine_vertex) const;

    /// Fine dim-simplices subdividing base simplex (dim, id); (dim+1)! of them, sorted.
    std::vector<SimplexId> subdivided(int dim, SimplexId id) const;

    /// Barycentric star of base simplex (dim, id): the fine (3 - dim)-simplices
    /// that meet it exactly in its barycenter. Sorted.
    std::span<const SimplexId> bst(int dim, SimplexId id) const
    {
        const auto& t = bst_[static_cast<std::size_t>(dim)];
        return {t.items.data() + t.offsets[id], t.items.data() + t.offsets[id + 1]};
    }

private:
    struct Table {
        std::vector<std::uint32_t> offsets;
        std::vector<SimplexId> items;
    };

    Complex3 base_;
    std::array<VertexId, 5> offsets_{};
    Complex3 fine_;
    std::array<Table, 4> bst_;
};

} // namespace tetdual
