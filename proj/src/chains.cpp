#include "tetdual/chains.hpp"

#include <algorithm>
#include <iterator>

#include "tetdual/error.hpp"

namespace tetdual {

namespace {

void normalize_mod2(std::vector<SimplexId>& ids)
{
    std::sort(ids.begin(), ids.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < ids.size();) {
        std::size_t j = i;
        while (j < ids.size() && ids[j] == ids[i]) ++j;
        if ((j - i) & 1) ids[out++] = ids[i];
        i = j;
    }
    ids.resize(out);
}

void check_dim(const Complex3& c, const Chain& x)
{
    if (x.dim() < 0 || x.dim() > 3) throw Error(ErrorCode::DimensionMismatch, "chain dimension must be 0..3");
    if (!x.empty() && x.simplices().back() >= c.count(x.dim()))
        throw Error(ErrorCode::UnknownSimplex, "chain refers to a simplex outside the complex");
}

BitVector facet_column(const Complex3& c, int dim, SimplexId id)
{
    BitVector col(c.count(dim - 1));
    for (auto f : c.facets(dim, id)) col.flip(f);
    return col;
}

} // namespace

Chain::Chain(int dim, std::vector<SimplexId> ids) : dim_(dim), ids_(std::move(ids)) { normalize_mod2(ids_); }

bool Chain::contains(SimplexId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

Chain& Chain::operator+=(const Chain& other)
{
    if (dim_ != other.dim_) throw Error(ErrorCode::DimensionMismatch, "adding chains of different dimension");
    std::vector<SimplexId> sum;
    sum.reserve(ids_.size() + other.ids_.size());
    std::set_symmetric_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                                  std::back_inserter(sum));
    ids_ = std::move(sum);
    return *this;
}

BitVector Chain::to_bits(std::size_t ambient) const { return BitVector::from_indices(ambient, ids_); }

Chain Chain::from_bits(int dim, const BitVector& bits)
{
    Chain x;
    x.dim_ = dim;
    for (auto i : bits.ones()) x.ids_.push_back(static_cast<SimplexId>(i));
    return x;
}

Chain Chain::from_simplices(const Complex3& c, int dim, std::span<const Simplex> simplices)
{
    std::vector<SimplexId> ids;
    ids.reserve(simplices.size());
    for (const auto& s : simplices) {
        if (s.dim() != dim) throw Error(ErrorCode::DimensionMismatch, to_string(s) + " has the wrong dimension");
        ids.push_back(c.id_of(s));
    }
    return Chain(dim, std::move(ids));
}

bool Cochain::evaluate(const Chain& x) const
{
    if (x.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "cochain and chain dimensions differ");
    const auto a = support();
    const auto b = x.simplices();
    std::size_t i = 0, j = 0;
    bool parity = false;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            parity = !parity;
            ++i;
            ++j;
        }
    }
    return parity;
}

// ---------------------------------------------------------------------------

Chain boundary(const Complex3& c, const Chain& x)
{
    check_dim(c, x);
    if (x.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "boundary of a 0-chain is undefined here");
    std::vector<SimplexId> faces;
    faces.reserve(static_cast<std::size_t>(x.dim() + 1) * x.size());
    for (auto s : x.simplices())
        for (auto f : c.facets(x.dim(), s)) faces.push_back(f);
    return Chain(x.dim() - 1, std::move(faces));
}

Cochain coboundary(const Complex3& c, const Cochain& j)
{
    check_dim(c, j.as_chain());
    if (j.dim() == 3) throw Error(ErrorCode::DimensionMismatch, "coboundary of a 3-cochain is undefined here");
    std::vector<SimplexId> up;
    for (auto s : j.support())
        for (auto u : c.cofaces(j.dim(), s, 1)) up.push_back(u);
    return Cochain(j.dim() + 1, std::move(up));
}

bool is_cycle(const Complex3& c, const Chain& x)
{
    check_dim(c, x);
    return x.dim() == 0 || boundary(c, x).empty();
}

bool is_boundary(const Complex3& c, const Chain& x)
{
    check_dim(c, x);
    return BoundarySpace(c, x.dim()).contains(x);
}

// ---------------------------------------------------------------------------

BoundarySpace::BoundarySpace(const Complex3& c, int m) : m_(m), image_(c.count(m))
{
    if (m < 0 || m > 3) throw Error(ErrorCode::DimensionMismatch, "boundary space dimension must be 0..3");
    if (m == 3) return;
    for (SimplexId s = 0; s < c.count(m + 1); ++s) image_.insert(facet_column(c, m + 1, s));
}

BitVector BoundarySpace::residual(BitVector bits) const
{
    image_.reduce(bits);
    return bits;
}

BitVector BoundarySpace::residual(const Chain& x) const
{
    if (x.dim() != m_) throw Error(ErrorCode::DimensionMismatch, "chain dimension differs from boundary space");
    return residual(x.to_bits(image_.ambient()));
}

bool BoundarySpace::contains(const Chain& x) const
{
    if (x.dim() != m_) throw Error(ErrorCode::DimensionMismatch, "chain dimension differs from boundary space");
    return image_.contains(x.to_bits(image_.ambient()));
}

std::size_t boundary_rank(const Complex3& c, int m)
{
    if (m <= 0 || m >= 4) return 0;
    ColumnReducer r(c.count(m - 1));
    for (SimplexId s = 0; s < c.count(m); ++s) r.insert(facet_column(c, m, s));
    return r.rank();
}

std::array<std::size_t, 4> betti_numbers(const Complex3& c)
{
    std::array<std::size_t, 5> rk{};
    for (int m = 0; m <= 4; ++m) rk[static_cast<std::size_t>(m)] = boundary_rank(c, m);
    std::array<std::size_t, 4> b{};
    for (std::size_t m = 0; m < 4; ++m) b[m] = c.count(static_cast<int>(m)) - rk[m] - rk[m + 1];
    return b;
}

// ---------------------------------------------------------------------------

HomologyBasis::HomologyBasis(const Complex3& c, int m) : m_(m), ambient_(c.count(m)), classes_(0)
{
    if (!c.is_closed_manifold())
        throw Error(ErrorCode::NotValidated, "homology basis needs a validated closed manifold");
    if (m < 0 || m > 3) throw Error(ErrorCode::DimensionMismatch, "homology dimension must be 0..3");

    // Kernel of ∂_m by column reduction with identity tags.
    std::vector<BitVector> kernel;
    if (m == 0) {
        for (SimplexId v = 0; v < c.count(0); ++v) {
            BitVector z(ambient_);
            z.set(v);
            kernel.push_back(std::move(z));
        }
    } else {
        ColumnReducer red(c.count(m - 1), ambient_);
        for (SimplexId s = 0; s < c.count(m); ++s) {
            BitVector col = facet_column(c, m, s);
            BitVector tag(ambient_);
            tag.set(s);
            red.reduce_top(col, &tag);
            if (col.none())
                kernel.push_back(std::move(tag));
            else
                red.insert(std::move(col), std::move(tag));
        }
    }

    const std::size_t tag_bits = kernel.size();
    classes_ = ColumnReducer(ambient_, tag_bits);
    if (m < 3)
        for (SimplexId s = 0; s < c.count(m + 1); ++s) classes_.insert(facet_column(c, m + 1, s), BitVector(tag_bits));

    for (auto& z : kernel) {
        BitVector residual = z;
        BitVector tag(tag_bits);
        classes_.reduce(residual, &tag);
        if (residual.none()) continue;
        tag.flip(representatives_.size());
        representatives_.push_back(Chain::from_bits(m, z));
        classes_.insert(std::move(residual), std::move(tag));
    }
}

BitVector HomologyBasis::class_vector(const Chain& x) const
{
    if (x.dim() != m_) throw Error(ErrorCode::DimensionMismatch, "chain dimension differs from basis");
    BitVector bits = x.to_bits(ambient_);
    BitVector tag(classes_.tag_bits());
    classes_.reduce(bits, &tag);
    if (bits.any()) throw Error(ErrorCode::NotACycle, "chain is not a cycle");
    tag.resize(rank());
    return tag;
}

HomologyBasis homology_basis(const Complex3& c, int m)
{
    if (m != 1 && m != 2) throw Error(ErrorCode::DimensionMismatch, "homology_basis supports m = 1 or 2");
    return HomologyBasis(c, m);
}

Chain subdivide_chain(const BarycentricComplex& bc, const Chain& x)
{
    check_dim(bc.base(), x);
    std::vector<SimplexId> ids;
    for (auto s : x.simplices()) {
        auto pieces = bc.subdivided(x.dim(), s);
        ids.insert(ids.end(), pieces.begin(), pieces.end());
    }
    return Chain(x.dim(), std::move(ids));
}

} // namespace tetdual
