#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tetdual/barycentric.hpp"
#include "tetdual/chains.hpp"
#include "tetdual/mesh.hpp"

namespace tetdual {

/// The cocycle J_x dual to an m-cycle x, with values on (3 - m)-simplices.
/// For m = 2 it also keeps the vertex/tet table J(v, σ) built by the flood
/// fill, indexed by (tet, local vertex slot).
struct CocycleTable {
    int m = 1;
    Cochain values;
    std::vector<std::uint8_t> aux; // 4 entries per tet when m == 2, else empty

    int value_dim() const { return 3 - m; }
    /// J(v, σ) for a vertex v of tet σ (m == 2 only).
    bool aux_value(const Complex3& c, VertexId v, SimplexId tet) const;
};

/// Cocycle dual to a 1-cycle: walks of x are followed around the stars of
/// their vertices, toggling every triangle crossed. Values on triangles.
CocycleTable cocycle_from_1cycle(const Complex3& c, const Chain& x);

/// Cocycle dual to a 2-cycle: per-vertex flood fill of J(v, σ) across the
/// vertex star, then J_x([uv]) = J(u, σ) + J(v, σ). Values on edges.
CocycleTable cocycle_from_2cycle(const Complex3& c, const Chain& x);

/// Closed walks, edge-disjoint, covering a 1-cycle (vertex sequences with
/// last == first). Exposed for testing.
std::vector<std::vector<VertexId>> eulerian_decomposition(const Complex3& c, const Chain& x);

/// J(y) for y of dimension 3 - m.
bool evaluate(const CocycleTable& j, const Chain& y);

/// Mod-2 intersection number of an m-cycle and a (3 - m)-cycle.
bool intersection_number(const Complex3& c, const Chain& x, const Chain& y);

/// Star chain F(J) = Σ J(σ) bst(σ): support in the base complex and its
/// realization in the subdivision.
struct StarCycle {
    int dim = 0;          // dimension of the realized chain
    Cochain support;      // simplices σ with J(σ) = 1
    Chain realization;    // Σ bst(σ) in the fine complex
};

StarCycle poincare_F(const BarycentricComplex& bc, const Cochain& j);
StarCycle poincare_F(const BarycentricComplex& bc, const CocycleTable& j);

/// Brute-force intersection number, independent of the cocycle
/// constructions: solves for any cochain J with δJ = 0 and
/// F(J) + x' a boundary in the subdivision, then returns J(y).
/// Build once per complex to amortize the reductions over many queries.
class IntersectionOracle {
public:
    explicit IntersectionOracle(const Complex3& c);
    explicit IntersectionOracle(std::shared_ptr<const BarycentricComplex> bc);

    const BarycentricComplex& subdivision() const { return *bc_; }

    /// Some cochain J (on (3 - dim x)-simplices) with F(J) homologous to x'.
    /// Throws NotACycle, or Infeasible when no such J exists.
    Cochain dual_cochain(const Chain& x) const;

    bool intersection(const Chain& x, const Chain& y) const;

    /// Whether subdivide(x) + realization(F(J)) bounds in the subdivision.
    bool realizes(const Chain& x, const Cochain& j) const;

    const BoundarySpace& fine_boundaries(int m) const;

private:
    struct Level {
        std::unique_ptr<BoundarySpace> boundaries; // B_m of the fine complex
        std::vector<BitVector> cell_residuals;     // residual of bst(σ), σ of dim 3 - m
        BitVector cell_union;                      // coordinates touched by any residual
    };
    const Level& level(int m) const;

    std::shared_ptr<const BarycentricComplex> bc_;
    std::array<Level, 3> levels_; // index m = 1, 2
};

bool oracle_intersection(const Complex3& c, const Chain& x, const Chain& y);

} // namespace tetdual
