#include "tetdual/duality.hpp"

#include <algorithm>
#include <cassert>

#include "tetdual/error.hpp"

namespace tetdual {

namespace {

void require_manifold(const Complex3& c)
{
    if (!c.is_closed_manifold())
        throw Error(ErrorCode::NotValidated, "input complex is not a validated closed 3-manifold");
}

void require_cycle(const Complex3& c, const Chain& x, int m)
{
    if (x.dim() != m) throw Error(ErrorCode::DimensionMismatch, "expected a " + std::to_string(m) + "-chain");
    if (!is_cycle(c, x)) throw Error(ErrorCode::NotACycle, "input chain has nonzero boundary");
}

/// Breadth-first search over the tets of st(v), stepping through faces that
/// contain v. Visit marks are epoch-stamped so one allocation serves every
/// search of a run.
class StarSearch {
public:
    explicit StarSearch(const Complex3& c)
        : c_(c), stamp_(c.num_tets(), 0), parent_(c.num_tets()), via_(c.num_tets())
    {
    }

    /// Appends the triangles crossed by the first-found path from `from` to `to`.
    void crossed_faces(VertexId v, SimplexId from, SimplexId to, std::vector<SimplexId>& out)
    {
        if (from == to) return;
        ++epoch_;
        queue_.clear();
        queue_.push_back(from);
        stamp_[from] = epoch_;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const SimplexId t = queue_[head];
            for (auto f : incident_faces(c_, v, t)) {
                const auto cof = c_.cofaces(2, f, 1);
                const SimplexId n = cof[0] == t ? cof[1] : cof[0];
                if (stamp_[n] == epoch_) continue;
                stamp_[n] = epoch_;
                parent_[n] = t;
                via_[n] = f;
                if (n == to) {
                    for (SimplexId cur = to; cur != from; cur = parent_[cur]) out.push_back(via_[cur]);
                    return;
                }
                queue_.push_back(n);
            }
        }
        // st(v) is strongly connected on a closed manifold.
        throw Error(ErrorCode::NotValidated, "vertex star is not connected through its faces");
    }

private:
    const Complex3& c_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> stamp_;
    std::vector<SimplexId> parent_;
    std::vector<SimplexId> via_;
    std::vector<SimplexId> queue_;
};

} // namespace

bool CocycleTable::aux_value(const Complex3& c, VertexId v, SimplexId tet) const
{
    if (m != 2) throw Error(ErrorCode::DimensionMismatch, "vertex/tet table exists only for 2-cycles");
    const int local = c.local_index(tet, v);
    if (local < 0) throw Error(ErrorCode::UnknownSimplex, "vertex is not in the tet");
    return aux[4 * static_cast<std::size_t>(tet) + static_cast<std::size_t>(local)] != 0;
}

std::vector<std::vector<VertexId>> eulerian_decomposition(const Complex3& c, const Chain& x)
{
    if (x.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "expected a 1-chain");

    std::vector<VertexId> verts;
    verts.reserve(2 * x.size());
    for (auto e : x.simplices()) {
        verts.push_back(c.edge(e)[0]);
        verts.push_back(c.edge(e)[1]);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };

    // adjacency in CSR form; x is sorted by edge id so each list is too
    std::vector<std::size_t> offset(verts.size() + 1, 0);
    for (auto e : x.simplices()) {
        ++offset[local(c.edge(e)[0]) + 1];
        ++offset[local(c.edge(e)[1]) + 1];
    }
    for (std::size_t i = 0; i < verts.size(); ++i) offset[i + 1] += offset[i];
    std::vector<std::pair<std::size_t, std::size_t>> adj(offset.back()); // (edge index in x, neighbor local)
    {
        auto fill = offset;
        for (std::size_t k = 0; k < x.size(); ++k) {
            const auto [a, b] = c.edge(x.simplices()[k]);
            const auto la = local(a), lb = local(b);
            adj[fill[la]++] = {k, lb};
            adj[fill[lb]++] = {k, la};
        }
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
        if ((offset[i + 1] - offset[i]) & 1) throw Error(ErrorCode::NotACycle, "odd vertex degree in 1-chain");

    std::vector<bool> used(x.size(), false);
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    std::vector<std::vector<VertexId>> walks;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < verts.size(); ++start) {
        if (cursor[start] == offset[start + 1]) continue;
        // Hierholzer: the circuit comes out in reverse traversal order.
        std::vector<VertexId> circuit;
        stack.assign(1, start);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            while (cursor[v] < offset[v + 1] && used[adj[cursor[v]].first]) ++cursor[v];
            if (cursor[v] == offset[v + 1]) {
                circuit.push_back(verts[v]);
                stack.pop_back();
            } else {
                const auto [edge, w] = adj[cursor[v]];
                used[edge] = true;
                stack.push_back(w);
            }
        }
        if (circuit.size() > 1) {
            std::reverse(circuit.begin(), circuit.end());
            walks.push_back(std::move(circuit));
        }
    }
    return walks;
}

CocycleTable cocycle_from_1cycle(const Complex3& c, const Chain& x)
{
    require_manifold(c);
    require_cycle(c, x, 1);

    std::vector<std::uint8_t> value(c.num_triangles(), 0);
    StarSearch search(c);
    std::vector<SimplexId> crossed;
    for (const auto& walk : eulerian_decomposition(c, x)) {
        const std::size_t n = walk.size() - 1;
        // sigma[i] is the minimal-id tet on edge [v_{i-1} v_i], sigma[0] = sigma[n]
        std::vector<SimplexId> sigma(n + 1);
        for (std::size_t i = 1; i <= n; ++i) {
            const SimplexId e = *c.find_edge(walk[i - 1], walk[i]);
            sigma[i] = c.cofaces(1, e, 2).front();
        }
        sigma[0] = sigma[n];
        for (std::size_t i = 0; i < n; ++i) {
            crossed.clear();
            search.crossed_faces(walk[i], sigma[i], sigma[i + 1], crossed);
            for (auto t : crossed) value[t] ^= 1;
        }
    }

    std::vector<SimplexId> support;
    for (SimplexId t = 0; t < value.size(); ++t)
        if (value[t]) support.push_back(t);
    return CocycleTable{1, Cochain(2, std::move(support)), {}};
}

CocycleTable cocycle_from_2cycle(const Complex3& c, const Chain& x)
{
    require_manifold(c);
    require_cycle(c, x, 2);

    std::vector<std::uint8_t> in_x(c.num_triangles(), 0);
    std::vector<VertexId> body;
    for (auto t : x.simplices()) {
        in_x[t] = 1;
        for (auto v : c.triangle(t)) body.push_back(v);
    }
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());

    std::vector<std::uint8_t> j(4 * c.num_tets(), 0);
    auto J = [&](VertexId v, SimplexId tet) -> std::uint8_t& {
        return j[4 * static_cast<std::size_t>(tet) + static_cast<std::size_t>(c.local_index(tet, v))];
    };

    // mark[2 t + k] == epoch  <=>  the k-th tet of ∂^{-1}(t) is marked for the current vertex
    std::vector<std::uint32_t> mark(2 * c.num_triangles(), 0);
    auto slot = [&](SimplexId t, SimplexId tet) -> std::size_t {
        return 2 * static_cast<std::size_t>(t) + (c.cofaces(2, t, 1)[0] == tet ? 0 : 1);
    };
    std::vector<SimplexId> pending;

    std::uint32_t epoch = 0;
    for (VertexId v : body) {
        ++epoch;
        const SimplexId first = c.cofaces(0, v, 3).front();
        pending.clear();
        for (auto tau : incident_faces(c, v, first)) {
            mark[slot(tau, first)] = epoch;
            pending.push_back(tau);
        }
        for (std::size_t head = 0; head < pending.size(); ++head) {
            const SimplexId t = pending[head];
            const auto cof = c.cofaces(2, t, 1);
            const bool m0 = mark[2 * t] == epoch, m1 = mark[2 * t + 1] == epoch;
            if (m0 == m1) continue; // both marked
            const SimplexId reached = m0 ? cof[0] : cof[1];
            const SimplexId next = m0 ? cof[1] : cof[0];
            J(v, next) = J(v, reached) ^ in_x[t];
            for (auto tau : incident_faces(c, v, next)) {
                if (tau == t) continue;
                mark[slot(tau, next)] = epoch;
                if (mark[2 * tau] != epoch || mark[2 * tau + 1] != epoch) pending.push_back(tau);
            }
        }
    }

    std::vector<SimplexId> support;
    for (SimplexId a = 0; a < c.num_edges(); ++a) {
        const SimplexId tet = c.cofaces(1, a, 2).front();
        const auto [u, w] = c.edge(a);
        if (J(u, tet) ^ J(w, tet)) support.push_back(a);
    }
    return CocycleTable{2, Cochain(1, std::move(support)), std::move(j)};
}

bool evaluate(const CocycleTable& j, const Chain& y)
{
    if (y.dim() != j.value_dim()) throw Error(ErrorCode::DimensionMismatch, "evaluation chain has the wrong dimension");
    return j.values.evaluate(y);
}

bool intersection_number(const Complex3& c, const Chain& x, const Chain& y)
{
    if (x.dim() + y.dim() != 3 || (x.dim() != 1 && x.dim() != 2))
        throw Error(ErrorCode::DimensionMismatch, "intersection needs dimensions (1, 2) or (2, 1)");
    if (!is_cycle(c, y)) throw Error(ErrorCode::NotACycle, "second argument is not a cycle");
    const auto j = x.dim() == 1 ? cocycle_from_1cycle(c, x) : cocycle_from_2cycle(c, x);
    return evaluate(j, y);
}

// ---------------------------------------------------------------------------

StarCycle poincare_F(const BarycentricComplex& bc, const Cochain& j)
{
    const int l = j.dim();
    if (l < 0 || l > 3) throw Error(ErrorCode::DimensionMismatch, "cochain dimension must be 0..3");
    std::vector<SimplexId> cells;
    for (auto s : j.support()) {
        const auto cell = bc.bst(l, s);
        cells.insert(cells.end(), cell.begin(), cell.end());
    }
    return StarCycle{3 - l, j, Chain(3 - l, std::move(cells))};
}

StarCycle poincare_F(const BarycentricComplex& bc, const CocycleTable& j) { return poincare_F(bc, j.values); }

// ---------------------------------------------------------------------------

IntersectionOracle::IntersectionOracle(const Complex3& c)
    : IntersectionOracle(std::make_shared<const BarycentricComplex>(c))
{
}

IntersectionOracle::IntersectionOracle(std::shared_ptr<const BarycentricComplex> bc) : bc_(std::move(bc))
{
    require_manifold(bc_->base());
    const Complex3& fine = bc_->fine();
    for (int m = 1; m <= 2; ++m) {
        auto& lv = levels_[static_cast<std::size_t>(m)];
        lv.boundaries = std::make_unique<BoundarySpace>(fine, m);
        const int l = 3 - m;
        lv.cell_residuals.reserve(bc_->base().count(l));
        for (SimplexId s = 0; s < bc_->base().count(l); ++s) {
            const auto cell = bc_->bst(l, s);
            lv.cell_residuals.push_back(lv.boundaries->residual(BitVector::from_indices(fine.count(m), cell)));
        }
        lv.cell_union = BitVector(fine.count(m));
        for (const auto& r : lv.cell_residuals) lv.cell_union |= r;
    }
}

const IntersectionOracle::Level& IntersectionOracle::level(int m) const
{
    if (m != 1 && m != 2) throw Error(ErrorCode::DimensionMismatch, "oracle supports 1- and 2-cycles");
    return levels_[static_cast<std::size_t>(m)];
}

const BoundarySpace& IntersectionOracle::fine_boundaries(int m) const { return *level(m).boundaries; }

Cochain IntersectionOracle::dual_cochain(const Chain& x) const
{
    const Level& lv = level(x.dim());
    const Complex3& base = bc_->base();
    require_cycle(base, x, x.dim());
    const int l = 3 - x.dim();
    const std::size_t unknowns = base.count(l);

    const BitVector target = lv.boundaries->residual(subdivide_chain(*bc_, x));

    // Rows: one per fine coordinate touched by any residual, then δJ = 0.
    BitVector active = target;
    active |= lv.cell_union;
    const auto coords = active.ones();

    std::vector<BitVector> rows(coords.size(), BitVector(unknowns));
    std::vector<std::size_t> row_of(active.size(), 0);
    for (std::size_t k = 0; k < coords.size(); ++k) row_of[coords[k]] = k;
    for (std::size_t s = 0; s < unknowns; ++s)
        for (auto i : lv.cell_residuals[s].ones()) rows[row_of[i]].set(s);
    BitVector rhs(coords.size() + base.count(l + 1));
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (target.test(coords[k])) rhs.set(k);
    for (SimplexId up = 0; up < base.count(l + 1); ++up) {
        BitVector row(unknowns);
        for (auto f : base.facets(l + 1, up)) row.flip(f);
        rows.push_back(std::move(row));
    }

    const auto system = Gf2Matrix::from_rows(std::move(rows), unknowns);
    const auto solution = system.solve(rhs);
    if (!solution) throw Error(ErrorCode::Infeasible, "no cochain dual to the given cycle");
    const auto ones = solution->ones();
    return Cochain(l, std::vector<SimplexId>(ones.begin(), ones.end()));
}

bool IntersectionOracle::intersection(const Chain& x, const Chain& y) const
{
    if (x.dim() + y.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "intersection needs complementary dimensions");
    if (!is_cycle(bc_->base(), y)) throw Error(ErrorCode::NotACycle, "second argument is not a cycle");
    return dual_cochain(x).evaluate(y);
}

bool IntersectionOracle::realizes(const Chain& x, const Cochain& j) const
{
    if (x.dim() + j.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "cochain dimension must be 3 - dim x");
    const Chain sum = subdivide_chain(*bc_, x) + poincare_F(*bc_, j).realization;
    return level(x.dim()).boundaries->contains(sum);
}

bool oracle_intersection(const Complex3& c, const Chain& x, const Chain& y)
{
    return IntersectionOracle(c).intersection(x, y);
}

} // namespace tetdual
