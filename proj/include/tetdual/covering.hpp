#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tetdual/chains.hpp"
#include "tetdual/duality.hpp"
#include "tetdual/gf2.hpp"
#include "tetdual/mesh.hpp"

namespace tetdual {

/// Cochains J^1..J^r dual to a basis of H_2, giving every 1-chain an index
/// in Z2^r. Holds its own copy of the complex.
class IndexSystem {
public:
    explicit IndexSystem(const Complex3& c);

    const Complex3& complex() const { return complex_; }
    std::size_t rank() const { return cocycles_.size(); }
    const std::vector<Chain>& source_basis() const { return basis_; }
    const std::vector<CocycleTable>& cocycles() const { return cocycles_; }

    /// J([a]) for one edge.
    const BitVector& edge_index(SimplexId edge) const { return edge_index_[edge]; }
    /// Index vector (J^1(y), ..., J^r(y)).
    BitVector index_of(const Chain& y) const;

private:
    Complex3 complex_;
    std::vector<Chain> basis_;
    std::vector<CocycleTable> cocycles_;
    std::vector<BitVector> edge_index_;
};

IndexSystem build_index_system(const Complex3& c);

BitVector index_of_chain(const IndexSystem& s, const Chain& y);

/// Homology test for 1-chains with equal boundary. Throws BoundaryMismatch.
bool chains_homologous(const IndexSystem& s, const Chain& y, const Chain& z);

struct DualBasis {
    std::vector<Chain> cycles; // y_1..y_r with J^i(y_j) = δ_ij
    Gf2Matrix pairing;         // recomputed J^i(y_j), the identity
};

/// Throws SingularPairing if the pairing with an H_1 basis is not invertible.
DualBasis dual_basis(const IndexSystem& s);

/// A walk given by its vertex sequence v_0..v_q.
using Walk = std::vector<VertexId>;

/// The Z2 chain of a walk (edges traversed an even number of times cancel).
/// Throws NotAPath if consecutive vertices are not joined by an edge.
Chain walk_chain(const Complex3& c, std::span<const VertexId> walk);

struct LiftedVertex {
    VertexId base = 0;
    BitVector k;

    bool operator==(const LiftedVertex&) const = default;
};

/// Lift of a walk starting at (v_0, k0): k_i = k_0 + J([v_0 v_1] + ... + [v_{i-1} v_i]).
std::vector<LiftedVertex> lift_path(const IndexSystem& s, std::span<const VertexId> walk, const BitVector& k0);

/// Nonnegative weights per edge; edges not set explicitly weigh 1.
class WeightFunction {
public:
    explicit WeightFunction(const Complex3& c) : weights_(c.num_edges(), 1.0) {}

    /// Throws InvalidParameter for negative or non-finite weights.
    void set(SimplexId edge, double w);
    double operator()(SimplexId edge) const { return weights_[edge]; }
    double of_walk(const Complex3& c, std::span<const VertexId> walk) const;

private:
    std::vector<double> weights_;
};

struct WeightedPath {
    Walk vertices;
    double weight = 0.0;
};

inline constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 20;

/// Number of lifted vertices N_0 * 2^r (saturating).
std::size_t lifted_vertex_count(const IndexSystem& s);

/// Least-weight walk homologous to y with the same endpoints, by Dijkstra on
/// the covering scheme. Throws RankGuardExceeded when N_0 * 2^r exceeds
/// `node_budget`, NotAPath for a broken walk.
WeightedPath min_homologous_path(const IndexSystem& s, std::span<const VertexId> walk, const WeightFunction& weights,
                                 std::size_t node_budget = kDefaultNodeBudget);

/// Whether the lifted vertices span a simplex of the covering scheme: one
/// vertex always does; otherwise the base vertices must span a simplex and
/// k_i = k_0 + J([v_0 v_i]) for every i.
bool is_covering_simplex(const IndexSystem& s, std::span<const LiftedVertex> vertices);

} // namespace tetdual
