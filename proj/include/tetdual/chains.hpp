#pragma once

#include <array>
#include <span>
#include <vector>

#include "tetdual/barycentric.hpp"
#include "tetdual/gf2.hpp"
#include "tetdual/mesh.hpp"

namespace tetdual {

/// A Z2 chain: a set of simplices of one dimension, stored as sorted dense
/// ids. Construction reduces repeated ids mod 2.
class Chain {
public:
    Chain() = default;
    explicit Chain(int dim, std::vector<SimplexId> ids = {});

    int dim() const { return dim_; }
    std::span<const SimplexId> simplices() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(SimplexId id) const;

    /// Symmetric difference. Throws DimensionMismatch.
    Chain& operator+=(const Chain& other);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    bool operator==(const Chain&) const = default;

    BitVector to_bits(std::size_t ambient) const;
    static Chain from_bits(int dim, const BitVector& bits);
    /// Looks up every simplex; throws UnknownSimplex / DimensionMismatch.
    static Chain from_simplices(const Complex3& c, int dim, std::span<const Simplex> simplices);

private:
    int dim_ = 0;
    std::vector<SimplexId> ids_;
};

/// A Z2 cochain, represented by its support.
class Cochain {
public:
    Cochain() = default;
    explicit Cochain(int dim, std::vector<SimplexId> support = {}) : chain_(dim, std::move(support)) {}

    int dim() const { return chain_.dim(); }
    std::span<const SimplexId> support() const { return chain_.simplices(); }
    bool empty() const { return chain_.empty(); }
    bool value(SimplexId id) const { return chain_.contains(id); }

    /// Parity of |support ∩ x|. Throws DimensionMismatch.
    bool evaluate(const Chain& x) const;

    Cochain& operator+=(const Cochain& other)
    {
        chain_ += other.chain_;
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    bool operator==(const Cochain&) const = default;

    /// The support viewed as a chain of the same dimension.
    const Chain& as_chain() const { return chain_; }

private:
    Chain chain_;
};

Chain boundary(const Complex3& c, const Chain& x);
Cochain coboundary(const Complex3& c, const Cochain& j);

bool is_cycle(const Complex3& c, const Chain& x);
/// Solves ∂c' = x over Z2.
bool is_boundary(const Complex3& c, const Chain& x);

/// Column-reduced image of ∂_{m+1}, reusable for many boundary tests.
class BoundarySpace {
public:
    BoundarySpace(const Complex3& c, int m);

    int dim() const { return m_; }
    std::size_t rank() const { return image_.rank(); }
    bool contains(const Chain& x) const;
    /// Canonical representative of x modulo boundaries.
    BitVector residual(const Chain& x) const;
    BitVector residual(BitVector bits) const;

private:
    int m_;
    ColumnReducer image_;
};

/// Rank of ∂_m : C_m -> C_{m-1} over Z2 (0 for m = 0 or m = 4).
std::size_t boundary_rank(const Complex3& c, int m);

/// Z2 Betti numbers b_0..b_3.
std::array<std::size_t, 4> betti_numbers(const Complex3& c);

/// A basis of H_m with representative cycles and the reduction data that
/// expresses any m-cycle in it.
class HomologyBasis {
public:
    HomologyBasis(const Complex3& c, int m);

    int dim() const { return m_; }
    std::size_t rank() const { return representatives_.size(); }
    const std::vector<Chain>& representatives() const { return representatives_; }

    /// Coordinates of [x] in the basis. Throws NotACycle / DimensionMismatch.
    BitVector class_vector(const Chain& x) const;

private:
    int m_;
    std::size_t ambient_;
    std::vector<Chain> representatives_;
    ColumnReducer classes_; // boundaries tagged 0, then representative residuals
};

HomologyBasis homology_basis(const Complex3& c, int m);

/// Barycentric subdivision of a base chain, as a chain of the fine complex.
Chain subdivide_chain(const BarycentricComplex& bc, const Chain& x);

} // namespace tetdual
