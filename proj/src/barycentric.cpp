#include "tetdual/barycentric.hpp"

#include <algorithm>

#include "tetdual/error.hpp"

namespace tetdual {

namespace {

std::vector<Tet> flag_tets(const Complex3& base, const std::array<VertexId, 5>& off)
{
    std::vector<Tet> tets;
    tets.reserve(24 * base.num_tets());
    for (SimplexId T = 0; T < base.num_tets(); ++T)
        for (auto t : base.facets(3, T))
            for (auto e : base.facets(2, t))
                for (auto v : base.facets(1, e)) tets.push_back({off[0] + v, off[1] + e, off[2] + t, off[3] + T});
    return tets;
}

} // namespace

BarycentricComplex::BarycentricComplex(Complex3 base)
    : base_(std::move(base))
{
    offsets_[0] = 0;
    for (int d = 0; d < 4; ++d)
        offsets_[static_cast<std::size_t>(d + 1)] =
            offsets_[static_cast<std::size_t>(d)] + static_cast<VertexId>(base_.count(d));
    const auto tets = flag_tets(base_, offsets_);
    fine_ = Complex3::build(tets, offsets_[4]);

    // Flags that start at a base simplex and climb to a tet.
    for (int l = 0; l <= 3; ++l) {
        auto& table = bst_[static_cast<std::size_t>(l)];
        table.offsets.assign(base_.count(l) + 1, 0);
        for (SimplexId s = 0; s < base_.count(l); ++s) {
            std::vector<SimplexId> cell;
            const VertexId s_star = barycenter(l, s);
            switch (l) {
            case 3: cell.push_back(s_star); break;
            case 2:
                for (auto T : base_.cofaces(2, s, 1)) cell.push_back(*fine_.find_edge(s_star, barycenter(3, T)));
                break;
            case 1:
                for (auto t : base_.cofaces(1, s, 1))
                    for (auto T : base_.cofaces(2, t, 1))
                        cell.push_back(*fine_.find_triangle(s_star, barycenter(2, t), barycenter(3, T)));
                break;
            case 0:
                for (auto e : base_.cofaces(0, s, 1))
                    for (auto t : base_.cofaces(1, e, 1))
                        for (auto T : base_.cofaces(2, t, 1))
                            cell.push_back(
                                *fine_.find_tet(s_star, barycenter(1, e), barycenter(2, t), barycenter(3, T)));
                break;
            }
            std::sort(cell.begin(), cell.end());
            table.items.insert(table.items.end(), cell.begin(), cell.end());
            table.offsets[s + 1] = static_cast<std::uint32_t>(table.items.size());
        }
    }
}

std::pair<int, SimplexId> BarycentricComplex::carrier(VertexId fine_vertex) const
{
    for (int d = 3; d >= 0; --d)
        if (fine_vertex >= offsets_[static_cast<std::size_t>(d)])
            return {d, fine_vertex - offsets_[static_cast<std::size_t>(d)]};
    throw Error(ErrorCode::UnknownSimplex, "fine vertex out of range");
}

std::vector<SimplexId> BarycentricComplex::subdivided(int dim, SimplexId id) const
{
    if (dim < 0 || dim > 3) throw Error(ErrorCode::DimensionMismatch, "dimension must be 0..3");
    if (id >= base_.count(dim)) throw Error(ErrorCode::UnknownSimplex, "base simplex out of range");

    // Each flag is built top-down: the chain of barycenters from (dim, id) to a vertex.
    std::vector<std::vector<VertexId>> flags{{barycenter(dim, id)}};
    std::vector<std::pair<int, SimplexId>> tops{{dim, id}};
    for (int d = dim; d > 0; --d) {
        std::vector<std::vector<VertexId>> next_flags;
        std::vector<std::pair<int, SimplexId>> next_tops;
        for (std::size_t i = 0; i < flags.size(); ++i)
            for (auto f : base_.facets(d, tops[i].second)) {
                auto flag = flags[i];
                flag.push_back(barycenter(d - 1, f));
                next_flags.push_back(std::move(flag));
                next_tops.push_back({d - 1, f});
            }
        flags = std::move(next_flags);
        tops = std::move(next_tops);
    }
    std::vector<SimplexId> out;
    out.reserve(flags.size());
    for (const auto& flag : flags) out.push_back(*fine_.find(Simplex(std::span<const VertexId>(flag))));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tetdual
