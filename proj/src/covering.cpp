#include "tetdual/covering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "tetdual/error.hpp"

namespace tetdual {

IndexSystem::IndexSystem(const Complex3& c) : complex_(c)
{
    if (!complex_.is_closed_manifold())
        throw Error(ErrorCode::NotValidated, "index system needs a validated closed manifold");
    const HomologyBasis h2(complex_, 2);
    basis_ = h2.representatives();
    cocycles_.reserve(basis_.size());
    for (const auto& x : basis_) cocycles_.push_back(cocycle_from_2cycle(complex_, x));

    edge_index_.assign(complex_.num_edges(), BitVector(rank()));
    for (std::size_t i = 0; i < cocycles_.size(); ++i)
        for (auto e : cocycles_[i].values.support()) edge_index_[e].set(i);
}

BitVector IndexSystem::index_of(const Chain& y) const
{
    if (y.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "index is defined for 1-chains");
    BitVector k(rank());
    for (auto e : y.simplices()) k ^= edge_index_[e];
    return k;
}

IndexSystem build_index_system(const Complex3& c) { return IndexSystem(c); }

BitVector index_of_chain(const IndexSystem& s, const Chain& y) { return s.index_of(y); }

bool chains_homologous(const IndexSystem& s, const Chain& y, const Chain& z)
{
    if (y.dim() != 1 || z.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "homology test expects 1-chains");
    if (boundary(s.complex(), y) != boundary(s.complex(), z))
        throw Error(ErrorCode::BoundaryMismatch, "chains have different boundaries");
    return s.index_of(y) == s.index_of(z);
}

DualBasis dual_basis(const IndexSystem& s)
{
    const std::size_t r = s.rank();
    DualBasis out;
    if (r == 0) return out;

    const HomologyBasis h1(s.complex(), 1);
    if (h1.rank() != r) throw Error(ErrorCode::SingularPairing, "H_1 and H_2 ranks differ");
    const auto& ys = h1.representatives();

    Gf2Matrix pairing(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) pairing.set(i, j, evaluate(s.cocycles()[i], ys[j]));
    const auto inv = pairing.inverse();
    if (!inv) throw Error(ErrorCode::SingularPairing, "intersection pairing is singular");

    for (std::size_t j = 0; j < r; ++j) {
        Chain y(1);
        for (std::size_t k = 0; k < r; ++k)
            if (inv->get(k, j)) y += ys[k];
        out.cycles.push_back(std::move(y));
    }
    out.pairing = Gf2Matrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out.pairing.set(i, j, evaluate(s.cocycles()[i], out.cycles[j]));
    if (out.pairing != Gf2Matrix::identity(r))
        throw Error(ErrorCode::SingularPairing, "transformed pairing is not the identity");
    return out;
}

namespace {

SimplexId walk_edge(const Complex3& c, VertexId a, VertexId b)
{
    if (a >= c.num_vertices() || b >= c.num_vertices() || a == b)
        throw Error(ErrorCode::NotAPath, "invalid step " + std::to_string(a) + " -> " + std::to_string(b));
    if (auto e = c.find_edge(a, b)) return *e;
    throw Error(ErrorCode::NotAPath, "no edge between " + std::to_string(a) + " and " + std::to_string(b));
}

void check_walk(const Complex3& c, std::span<const VertexId> walk)
{
    if (walk.empty()) throw Error(ErrorCode::NotAPath, "a walk needs at least one vertex");
    if (walk.front() >= c.num_vertices()) throw Error(ErrorCode::NotAPath, "start vertex out of range");
}

} // namespace

Chain walk_chain(const Complex3& c, std::span<const VertexId> walk)
{
    check_walk(c, walk);
    std::vector<SimplexId> edges;
    edges.reserve(walk.size());
    for (std::size_t i = 1; i < walk.size(); ++i) edges.push_back(walk_edge(c, walk[i - 1], walk[i]));
    return Chain(1, std::move(edges));
}

std::vector<LiftedVertex> lift_path(const IndexSystem& s, std::span<const VertexId> walk, const BitVector& k0)
{
    const Complex3& c = s.complex();
    check_walk(c, walk);
    if (k0.size() != s.rank()) throw Error(ErrorCode::DimensionMismatch, "start offset has the wrong length");
    std::vector<LiftedVertex> lifted;
    lifted.reserve(walk.size());
    lifted.push_back({walk[0], k0});
    for (std::size_t i = 1; i < walk.size(); ++i) {
        BitVector k = lifted.back().k;
        k ^= s.edge_index(walk_edge(c, walk[i - 1], walk[i]));
        lifted.push_back({walk[i], std::move(k)});
    }
    return lifted;
}

void WeightFunction::set(SimplexId edge, double w)
{
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::InvalidParameter, "edge weights must be finite and >= 0");
    if (edge >= weights_.size()) throw Error(ErrorCode::UnknownSimplex, "edge id out of range");
    weights_[edge] = w;
}

double WeightFunction::of_walk(const Complex3& c, std::span<const VertexId> walk) const
{
    double total = 0.0;
    for (std::size_t i = 1; i < walk.size(); ++i) total += weights_[walk_edge(c, walk[i - 1], walk[i])];
    return total;
}

std::size_t lifted_vertex_count(const IndexSystem& s)
{
    const std::size_t n0 = s.complex().num_vertices();
    if (s.rank() >= 63 || (n0 > 0 && n0 > (std::numeric_limits<std::size_t>::max() >> s.rank())))
        return std::numeric_limits<std::size_t>::max();
    return n0 << s.rank();
}

WeightedPath min_homologous_path(const IndexSystem& s, std::span<const VertexId> walk, const WeightFunction& weights,
                                 std::size_t node_budget)
{
    const Complex3& c = s.complex();
    const std::size_t nodes = lifted_vertex_count(s);
    if (nodes > node_budget)
        throw Error(ErrorCode::RankGuardExceeded, "covering has " + std::to_string(s.rank()) +
                                                      " index bits; node budget " + std::to_string(node_budget) +
                                                      " is too small");
    const Chain y = walk_chain(c, walk);
    const std::size_t r = s.rank();

    auto pack = [r](const BitVector& k) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (k.test(i)) bits |= std::uint64_t{1} << i;
        return bits;
    };
    std::vector<std::uint64_t> edge_bits(c.num_edges());
    for (SimplexId e = 0; e < c.num_edges(); ++e) edge_bits[e] = pack(s.edge_index(e));

    // lifted vertex (v, k) has id v * 2^r + k, so id order is lexicographic in (v, k)
    auto node = [r](VertexId v, std::uint64_t k) { return (static_cast<std::uint64_t>(v) << r) | k; };
    const std::uint64_t source = node(walk.front(), 0);
    const std::uint64_t target = node(walk.back(), pack(s.index_of(y)));

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(nodes, inf);
    std::vector<std::uint64_t> parent(nodes, std::numeric_limits<std::uint64_t>::max());
    using Entry = std::pair<double, std::uint64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        if (u == target) break;
        const auto v = static_cast<VertexId>(u >> r);
        const std::uint64_t k = u & ((std::uint64_t{1} << r) - 1);
        for (auto e : c.cofaces(0, v, 1)) {
            const auto& ends = c.edge(e);
            const VertexId w = ends[0] == v ? ends[1] : ends[0];
            const std::uint64_t next = node(w, k ^ edge_bits[e]);
            const double nd = d + weights(e);
            if (nd < dist[next]) {
                dist[next] = nd;
                parent[next] = u;
                heap.push({nd, next});
            }
        }
    }
    if (dist[target] == inf) throw Error(ErrorCode::Infeasible, "target lift is unreachable");

    WeightedPath out;
    for (std::uint64_t u = target;; u = parent[u]) {
        out.vertices.push_back(static_cast<VertexId>(u >> r));
        if (u == source) break;
    }
    std::reverse(out.vertices.begin(), out.vertices.end());
    out.weight = dist[target];
    return out;
}

bool is_covering_simplex(const IndexSystem& s, std::span<const LiftedVertex> vertices)
{
    if (vertices.empty() || vertices.size() > 4) return false;
    for (const auto& v : vertices)
        if (v.base >= s.complex().num_vertices() || v.k.size() != s.rank()) return false;
    if (vertices.size() == 1) return true;

    std::vector<VertexId> base;
    for (const auto& v : vertices) base.push_back(v.base);
    std::sort(base.begin(), base.end());
    if (std::adjacent_find(base.begin(), base.end()) != base.end()) return false;
    if (!s.complex().find(Simplex(std::span<const VertexId>(base)))) return false;

    const auto& first = vertices.front();
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const auto e = *s.complex().find_edge(first.base, vertices[i].base);
        if ((first.k ^ s.edge_index(e)) != vertices[i].k) return false;
    }
    return true;
}

} // namespace tetdual
