#include "tetdual/mesh.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tetdual/error.hpp"

namespace tetdual {

namespace {

template <std::size_t N>
std::string tuple_string(const std::array<VertexId, N>& a)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < N; ++i) out << (i ? "," : "") << a[i];
    out << ')';
    return out.str();
}

template <std::size_t N>
std::optional<SimplexId> lookup(const std::vector<std::array<VertexId, N>>& list, std::array<VertexId, N> key)
{
    std::sort(key.begin(), key.end());
    auto it = std::lower_bound(list.begin(), list.end(), key);
    if (it == list.end() || *it != key) return std::nullopt;
    return static_cast<SimplexId>(it - list.begin());
}

template <std::size_t N>
void sort_unique(std::vector<std::array<VertexId, N>>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

constexpr std::array<std::array<int, 2>, 6> kTetEdgeLocal{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

} // namespace

// ---------------------------------------------------------------------------

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::span<const VertexId>(vertices.begin(), vertices.size()))
{
}

Simplex::Simplex(std::span<const VertexId> vertices)
{
    if (vertices.empty() || vertices.size() > 4)
        throw Error(ErrorCode::InvalidParameter, "a simplex needs 1 to 4 vertices");
    std::copy(vertices.begin(), vertices.end(), v_.begin());
    size_ = static_cast<std::uint8_t>(vertices.size());
    std::sort(v_.begin(), v_.begin() + size_);
    if (std::adjacent_find(v_.begin(), v_.begin() + size_) != v_.begin() + size_)
        throw Error(ErrorCode::InvalidParameter, "repeated vertex in simplex");
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(v_.begin(), v_.begin() + size_, v);
}

std::string to_string(const Simplex& s)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < s.vertices().size(); ++i) out << (i ? "," : "") << s[i];
    out << ')';
    return out.str();
}

// ---------------------------------------------------------------------------

Complex3 Complex3::build(std::span<const Tet> input, std::optional<std::size_t> num_vertices)
{
    Complex3 c;
    c.tets_.reserve(input.size());
    std::size_t max_vertex = 0;
    for (Tet t : input) {
        std::sort(t.begin(), t.end());
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
            throw Error(ErrorCode::DegenerateTet, "tet " + tuple_string(t) + " repeats a vertex");
        max_vertex = std::max<std::size_t>(max_vertex, t[3] + 1);
        c.tets_.push_back(t);
    }
    if (num_vertices && *num_vertices < max_vertex)
        throw Error(ErrorCode::InvalidParameter, "vertex id out of range");
    std::sort(c.tets_.begin(), c.tets_.end());
    if (auto it = std::adjacent_find(c.tets_.begin(), c.tets_.end()); it != c.tets_.end())
        throw Error(ErrorCode::DuplicateTet, "tet " + tuple_string(*it) + " occurs twice");

    for (const auto& t : c.tets_) {
        for (auto [a, b] : kTetEdgeLocal) c.edges_.push_back({t[a], t[b]});
        for (int skip = 0; skip < 4; ++skip) {
            Triangle tri{};
            for (int i = 0, k = 0; i < 4; ++i)
                if (i != skip) tri[k++] = t[i];
            c.triangles_.push_back(tri);
        }
    }
    sort_unique(c.edges_);
    sort_unique(c.triangles_);

    c.counts_ = {num_vertices.value_or(max_vertex), c.edges_.size(), c.triangles_.size(), c.tets_.size()};

    c.edge_vertices_.reserve(2 * c.edges_.size());
    for (const auto& e : c.edges_) c.edge_vertices_.insert(c.edge_vertices_.end(), e.begin(), e.end());

    c.triangle_edges_.reserve(3 * c.triangles_.size());
    for (const auto& t : c.triangles_) {
        c.triangle_edges_.push_back(*lookup(c.edges_, Edge{t[1], t[2]}));
        c.triangle_edges_.push_back(*lookup(c.edges_, Edge{t[0], t[2]}));
        c.triangle_edges_.push_back(*lookup(c.edges_, Edge{t[0], t[1]}));
    }

    c.tet_triangles_.reserve(4 * c.tets_.size());
    c.tet_edges_.reserve(6 * c.tets_.size());
    for (const auto& t : c.tets_) {
        c.tet_triangles_.push_back(*lookup(c.triangles_, Triangle{t[1], t[2], t[3]}));
        c.tet_triangles_.push_back(*lookup(c.triangles_, Triangle{t[0], t[2], t[3]}));
        c.tet_triangles_.push_back(*lookup(c.triangles_, Triangle{t[0], t[1], t[3]}));
        c.tet_triangles_.push_back(*lookup(c.triangles_, Triangle{t[0], t[1], t[2]}));
        for (auto [a, b] : kTetEdgeLocal) c.tet_edges_.push_back(*lookup(c.edges_, Edge{t[a], t[b]}));
    }

    c.build_incidence();
    c.validation_ = c.run_validation();
    return c;
}

void Complex3::build_incidence()
{
    // faces(hi, id) enumerates the lo-dimensional faces of a hi-simplex.
    auto for_faces = [this](int lo, int hi, SimplexId id, auto&& fn) {
        if (lo == 0) {
            switch (hi) {
            case 1: for (auto v : edges_[id]) fn(v); break;
            case 2: for (auto v : triangles_[id]) fn(v); break;
            case 3: for (auto v : tets_[id]) fn(v); break;
            }
        } else if (lo == 1) {
            if (hi == 2)
                for (auto e : facets(2, id)) fn(e);
            else
                for (auto e : tet_edges(id)) fn(e);
        } else {
            for (auto t : facets(3, id)) fn(t);
        }
    };

    for (int lo = 0; lo < 3; ++lo) {
        for (int hi = lo + 1; hi <= 3; ++hi) {
            auto& inc = incidence_[static_cast<std::size_t>(lo * 3 + (hi - lo - 1))];
            inc.offsets.assign(count(lo) + 1, 0);
            for (SimplexId id = 0; id < count(hi); ++id)
                for_faces(lo, hi, id, [&](SimplexId f) { ++inc.offsets[f + 1]; });
            std::partial_sum(inc.offsets.begin(), inc.offsets.end(), inc.offsets.begin());
            inc.items.resize(inc.offsets.back());
            std::vector<std::uint32_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
            // ascending hi ids keep every list sorted
            for (SimplexId id = 0; id < count(hi); ++id)
                for_faces(lo, hi, id, [&](SimplexId f) { inc.items[fill[f]++] = id; });
        }
    }
}

Simplex Complex3::simplex(int dim, SimplexId id) const
{
    switch (dim) {
    case 0: return Simplex{id};
    case 1: return Simplex(std::span<const VertexId>(edges_[id]));
    case 2: return Simplex(std::span<const VertexId>(triangles_[id]));
    case 3: return Simplex(std::span<const VertexId>(tets_[id]));
    }
    throw Error(ErrorCode::DimensionMismatch, "dimension must be 0..3");
}

std::optional<SimplexId> Complex3::find_edge(VertexId a, VertexId b) const { return lookup(edges_, Edge{a, b}); }

std::optional<SimplexId> Complex3::find_triangle(VertexId a, VertexId b, VertexId c) const
{
    return lookup(triangles_, Triangle{a, b, c});
}

std::optional<SimplexId> Complex3::find_tet(VertexId a, VertexId b, VertexId c, VertexId d) const
{
    return lookup(tets_, Tet{a, b, c, d});
}

std::optional<SimplexId> Complex3::find(const Simplex& s) const
{
    const auto v = s.vertices();
    switch (s.dim()) {
    case 0: return v[0] < num_vertices() ? std::optional<SimplexId>(v[0]) : std::nullopt;
    case 1: return find_edge(v[0], v[1]);
    case 2: return find_triangle(v[0], v[1], v[2]);
    case 3: return find_tet(v[0], v[1], v[2], v[3]);
    }
    return std::nullopt;
}

SimplexId Complex3::id_of(const Simplex& s) const
{
    if (auto id = find(s)) return *id;
    throw Error(ErrorCode::UnknownSimplex, to_string(s) + " is not in the complex");
}

std::span<const SimplexId> Complex3::facets(int dim, SimplexId id) const
{
    switch (dim) {
    case 1: return {edge_vertices_.data() + 2 * id, 2};
    case 2: return {triangle_edges_.data() + 3 * id, 3};
    case 3: return {tet_triangles_.data() + 4 * id, 4};
    }
    throw Error(ErrorCode::DimensionMismatch, "facets need dimension 1..3");
}

std::span<const SimplexId> Complex3::tet_edges(SimplexId tet) const { return {tet_edges_.data() + 6 * tet, 6}; }

std::span<const SimplexId> Complex3::cofaces(int dim, SimplexId id, int up) const
{
    if (dim < 0 || up < 1 || dim + up > 3) throw Error(ErrorCode::DimensionMismatch, "coface query out of range");
    return incidence_[static_cast<std::size_t>(dim * 3 + up - 1)].at(id);
}

int Complex3::local_index(SimplexId tet, VertexId v) const
{
    const auto& t = tets_[tet];
    for (int i = 0; i < 4; ++i)
        if (t[static_cast<std::size_t>(i)] == v) return i;
    return -1;
}

long Complex3::euler_characteristic() const
{
    return static_cast<long>(counts_[0]) - static_cast<long>(counts_[1]) + static_cast<long>(counts_[2]) -
           static_cast<long>(counts_[3]);
}

ValidationReport Complex3::run_validation() const
{
    auto fail = [](ValidationFailure f, std::string w) { return ValidationReport{false, f, std::move(w)}; };

    if (tets_.empty()) return fail(ValidationFailure::Disconnected, "complex has no tetrahedra");

    for (SimplexId t = 0; t < count(2); ++t) {
        const auto k = cofaces(2, t, 1).size();
        if (k != 2)
            return fail(ValidationFailure::TriangleCofaces,
                        "triangle " + tuple_string(triangles_[t]) + " has " + std::to_string(k) + " cofacet tets");
    }

    // Edge links: the opposite edges of the incident tets must form one cycle.
    std::vector<Edge> ring;
    for (SimplexId e = 0; e < count(1); ++e) {
        const auto [u, v] = edges_[e];
        ring.clear();
        for (auto t : cofaces(1, e, 2)) {
            Edge opp{};
            int k = 0;
            for (auto w : tets_[t])
                if (w != u && w != v) opp[static_cast<std::size_t>(k++)] = w;
            ring.push_back(opp);
        }
        bool ok = ring.size() >= 3;
        // walk the cycle starting from the first opposite edge
        if (ok) {
            std::vector<bool> used(ring.size(), false);
            used[0] = true;
            VertexId start = ring[0][0], cur = ring[0][1];
            std::size_t steps = 1;
            while (cur != start && ok) {
                std::size_t next = ring.size();
                for (std::size_t i = 0; i < ring.size(); ++i)
                    if (!used[i] && (ring[i][0] == cur || ring[i][1] == cur)) {
                        if (next != ring.size()) ok = false; // branching
                        next = i;
                    }
                if (next == ring.size()) {
                    ok = false;
                    break;
                }
                used[next] = true;
                cur = ring[next][0] == cur ? ring[next][1] : ring[next][0];
                ++steps;
            }
            ok = ok && steps == ring.size();
        }
        if (!ok)
            return fail(ValidationFailure::EdgeLink, "edge " + tuple_string(edges_[e]) + " link is not a single cycle");
    }

    // Vertex links: connected closed surface with Euler characteristic 2.
    std::vector<Edge> link_edges;
    for (VertexId v = 0; v < count(0); ++v) {
        const auto st = cofaces(0, v, 3);
        if (st.empty()) return fail(ValidationFailure::Disconnected, "vertex " + std::to_string(v) + " is isolated");
        link_edges.clear();
        std::vector<Triangle> opposite;
        opposite.reserve(st.size());
        for (auto t : st) {
            Triangle tri{};
            int k = 0;
            for (auto w : tets_[t])
                if (w != v) tri[static_cast<std::size_t>(k++)] = w;
            opposite.push_back(tri);
            link_edges.push_back({tri[0], tri[1]});
            link_edges.push_back({tri[0], tri[2]});
            link_edges.push_back({tri[1], tri[2]});
        }
        std::sort(link_edges.begin(), link_edges.end());
        bool closed = true;
        for (std::size_t i = 0; i < link_edges.size();) {
            std::size_t j = i;
            while (j < link_edges.size() && link_edges[j] == link_edges[i]) ++j;
            if (j - i != 2) closed = false;
            i = j;
        }
        const auto unique_edges = static_cast<long>(std::unique(link_edges.begin(), link_edges.end()) - link_edges.begin());
        link_edges.resize(static_cast<std::size_t>(unique_edges));
        const long chi = static_cast<long>(cofaces(0, v, 1).size()) - unique_edges + static_cast<long>(st.size());

        // connectivity of the link triangles through shared link edges
        UnionFind uf(opposite.size());
        std::vector<std::pair<Edge, std::uint32_t>> by_edge;
        for (std::uint32_t i = 0; i < opposite.size(); ++i) {
            const auto& tri = opposite[i];
            by_edge.push_back({{tri[0], tri[1]}, i});
            by_edge.push_back({{tri[0], tri[2]}, i});
            by_edge.push_back({{tri[1], tri[2]}, i});
        }
        std::sort(by_edge.begin(), by_edge.end());
        for (std::size_t i = 1; i < by_edge.size(); ++i)
            if (by_edge[i].first == by_edge[i - 1].first) uf.unite(by_edge[i].second, by_edge[i - 1].second);
        bool connected = true;
        for (std::uint32_t i = 1; i < opposite.size(); ++i)
            if (uf.find(i) != uf.find(0)) connected = false;

        if (!closed || !connected || chi != 2)
            return fail(ValidationFailure::VertexLink, "vertex " + std::to_string(v) + " link is not a 2-sphere (chi " +
                                                           std::to_string(chi) + (closed ? "" : ", not closed") +
                                                           (connected ? "" : ", disconnected") + ")");
    }

    UnionFind uf(count(0));
    for (const auto& e : edges_) uf.unite(e[0], e[1]);
    for (VertexId v = 1; v < count(0); ++v)
        if (uf.find(v) != uf.find(0))
            return fail(ValidationFailure::Disconnected, "vertex " + std::to_string(v) + " is not connected to vertex 0");

    return {};
}

// ---------------------------------------------------------------------------

ValidationReport validate_closed_manifold(const Complex3& c) { return c.validation(); }

std::vector<SimplexId> star(const Complex3& c, const Simplex& s)
{
    const SimplexId id = c.id_of(s);
    if (s.dim() == 3) return {id};
    auto st = c.cofaces(s.dim(), id, 3 - s.dim());
    return {st.begin(), st.end()};
}

namespace {
void check_vertex(const Complex3& c, VertexId v)
{
    if (v >= c.num_vertices()) throw Error(ErrorCode::UnknownSimplex, "vertex " + std::to_string(v) + " out of range");
}
} // namespace

std::vector<SimplexId> link(const Complex3& c, VertexId v)
{
    check_vertex(c, v);
    std::vector<SimplexId> out;
    for (auto t : c.cofaces(0, v, 3))
        out.push_back(c.facets(3, t)[static_cast<std::size_t>(c.local_index(t, v))]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SimplexId> incident_boundary(const Complex3& c, VertexId v)
{
    check_vertex(c, v);
    std::vector<SimplexId> faces;
    for (auto t : c.cofaces(0, v, 3))
        for (auto f : incident_faces(c, v, t)) faces.push_back(f);
    std::sort(faces.begin(), faces.end());
    std::vector<SimplexId> out;
    for (std::size_t i = 0; i < faces.size();) {
        std::size_t j = i;
        while (j < faces.size() && faces[j] == faces[i]) ++j;
        if ((j - i) & 1) out.push_back(faces[i]);
        i = j;
    }
    return out;
}

std::array<SimplexId, 3> incident_faces(const Complex3& c, VertexId v, SimplexId tet)
{
    const int local = c.local_index(tet, v);
    if (local < 0) throw Error(ErrorCode::UnknownSimplex, "vertex " + std::to_string(v) + " is not in the tet");
    std::array<SimplexId, 3> out{};
    const auto faces = c.facets(3, tet);
    for (int i = 0, k = 0; i < 4; ++i)
        if (i != local) out[static_cast<std::size_t>(k++)] = faces[static_cast<std::size_t>(i)];
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

Complex3 gen_s3()
{
    std::vector<Tet> tets;
    for (VertexId skip = 0; skip < 5; ++skip) {
        Tet t{};
        for (VertexId v = 0, k = 0; v < 5; ++v)
            if (v != skip) t[k++] = v;
        tets.push_back(t);
    }
    return Complex3::build(tets);
}

VertexId t3_vertex(int q, int x, int y, int z)
{
    auto wrap = [q](int a) { return ((a % q) + q) % q; };
    return static_cast<VertexId>(wrap(x) + q * wrap(y) + q * q * wrap(z));
}

Complex3 gen_t3(int q)
{
    if (q < 3) throw Error(ErrorCode::InvalidParameter, "gen_t3 needs q >= 3");
    constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::vector<Tet> tets;
    tets.reserve(static_cast<std::size_t>(6 * q * q * q));
    for (int z = 0; z < q; ++z)
        for (int y = 0; y < q; ++y)
            for (int x = 0; x < q; ++x)
                for (const auto& p : perms) {
                    std::array<int, 3> pos{x, y, z};
                    Tet t{};
                    t[0] = t3_vertex(q, pos[0], pos[1], pos[2]);
                    for (int k = 0; k < 3; ++k) {
                        ++pos[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])];
                        t[static_cast<std::size_t>(k + 1)] = t3_vertex(q, pos[0], pos[1], pos[2]);
                    }
                    tets.push_back(t);
                }
    return Complex3::build(tets, static_cast<std::size_t>(q * q * q));
}

} // namespace tetdual
