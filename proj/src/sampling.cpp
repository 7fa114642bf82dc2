#include "tetdual/sampling.hpp"

#include "tetdual/error.hpp"

namespace tetdual {

Chain random_chain(const Complex3& c, int dim, std::mt19937_64& rng, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<SimplexId> ids;
    for (SimplexId s = 0; s < c.count(dim); ++s)
        if (coin(rng)) ids.push_back(s);
    return Chain(dim, std::move(ids));
}

Chain random_cycle(const Complex3& c, const HomologyBasis& basis, std::mt19937_64& rng, double p)
{
    const int m = basis.dim();
    Chain x(m);
    std::bernoulli_distribution coin(0.5);
    for (const auto& rep : basis.representatives())
        if (coin(rng)) x += rep;
    if (m < 3) x += boundary(c, random_chain(c, m + 1, rng, p));
    return x;
}

Walk random_walk(const Complex3& c, VertexId start, std::size_t steps, std::mt19937_64& rng)
{
    if (start >= c.num_vertices()) throw Error(ErrorCode::UnknownSimplex, "start vertex out of range");
    Walk walk{start};
    for (std::size_t i = 0; i < steps; ++i) {
        const auto edges = c.cofaces(0, walk.back(), 1);
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        const auto& e = c.edge(edges[pick(rng)]);
        walk.push_back(e[0] == walk.back() ? e[1] : e[0]);
    }
    return walk;
}

} // namespace tetdual
