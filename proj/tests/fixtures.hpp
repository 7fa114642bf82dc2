#pragma once

#include <array>
#include <string>
#include <vector>

#include "tetdual/chains.hpp"
#include "tetdual/covering.hpp"
#include "tetdual/io.hpp"
#include "tetdual/mesh.hpp"

namespace fixtures {

using namespace tetdual;

inline Complex3 rp3() { return io::load_mesh(std::string(TETDUAL_DATA_DIR) + "/rp3.tetmesh"); }

inline VertexId grid(int q, std::array<int, 3> p) { return t3_vertex(q, p[0], p[1], p[2]); }

/// Closed walk of q unit steps along `axis` through grid point `start`.
inline Walk axis_walk(int q, int axis, std::array<int, 3> start = {0, 0, 0})
{
    Walk w;
    for (int i = 0; i <= q; ++i) {
        auto p = start;
        p[axis] += i;
        w.push_back(grid(q, p));
    }
    return w;
}

inline Chain axis_loop(const Complex3& c, int q, int axis, std::array<int, 3> start = {0, 0, 0})
{
    return walk_chain(c, axis_walk(q, axis, start));
}

/// All triangles of gen_t3(q) lying in the plane {coordinate `axis` = level}.
inline Chain coordinate_torus(const Complex3& c, int q, int axis, int level)
{
    auto coord = [q, axis](VertexId v) {
        int x = static_cast<int>(v);
        for (int i = 0; i < axis; ++i) x /= q;
        return x % q;
    };
    std::vector<SimplexId> ids;
    for (SimplexId t = 0; t < c.num_triangles(); ++t) {
        const auto& tri = c.triangle(t);
        if (coord(tri[0]) == level && coord(tri[1]) == level && coord(tri[2]) == level) ids.push_back(t);
    }
    return Chain(2, std::move(ids));
}

inline Chain whole_boundary(const Complex3& c, int dim, SimplexId id)
{
    return boundary(c, Chain(dim, {id}));
}

} // namespace fixtures
