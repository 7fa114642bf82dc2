// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "tetdual/covering.hpp"
#include "tetdual/duality.hpp"
#include "tetdual/error.hpp"
#include "tetdual/io.hpp"
#include "tetdual/sampling.hpp"

using namespace tetdual;
using Clock = std::chrono::steady_clock;

namespace {

struct Fixture {
    std::string name;
    Complex3 complex;
};

std::vector<Fixture> fixtures()
{
    return {{"s3", gen_s3()},
            {"t3:3", gen_t3(3)},
            {"t3:4", gen_t3(4)},
            {"rp3", io::load_mesh(std::string(TETDUAL_DATA_DIR) + "/rp3.tetmesh")}};
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << title << ": " << detail << std::endl;
    if (!ok) ++failures;
}

CocycleTable cocycle(const Complex3& c, const Chain& x)
{
    return x.dim() == 1 ? cocycle_from_1cycle(c, x) : cocycle_from_2cycle(c, x);
}

std::string ratio(std::size_t good, std::size_t total)
{
    return std::to_string(good) + "/" + std::to_string(total);
}

std::string fixed(double v, int digits = 2)
{
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(digits);
    ss << v;
    return ss.str();
}

// 1 ------------------------------------------------------------------------

void basis_pairs(const std::vector<Fixture>& fx)
{
    const auto start = Clock::now();
    std::size_t good = 0, total = 0;
    for (const auto& f : fx) {
        const auto& c = f.complex;
        const IntersectionOracle oracle(c);
        const HomologyBasis h1(c, 1), h2(c, 2);
        for (int m = 1; m <= 2; ++m) {
            const auto& xs = (m == 1 ? h1 : h2).representatives();
            const auto& ys = (m == 1 ? h2 : h1).representatives();
            for (const auto& x : xs)
                for (const auto& y : ys) {
                    ++total;
                    if (intersection_number(c, x, y) == oracle.intersection(x, y)) ++good;
                }
        }
    }
    const double t = seconds_since(start);
    report(1, "basis pairs match the oracle", good == total && t < 60.0,
           ratio(good, total) + " pairs, " + fixed(t) + " s");
}

// 2 ------------------------------------------------------------------------

void cocycle_suite(const std::vector<Fixture>& fx)
{
    std::mt19937_64 rng(2);
    std::size_t closed = 0, realized = 0, total = 0;
    for (const auto& f : fx) {
        const auto& c = f.complex;
        const IntersectionOracle oracle(c);
        for (int m = 1; m <= 2; ++m) {
            const HomologyBasis h(c, m);
            for (int i = 0; i < 50; ++i) {
                const auto x = random_cycle(c, h, rng, 0.05);
                const auto j = cocycle(c, x);
                ++total;
                if (coboundary(c, j.values).empty()) ++closed;
                if (oracle.realizes(x, j.values)) ++realized;
            }
        }
    }
    report(2, "cocycles are closed and realize their cycle", closed == total && realized == total,
           "closed " + ratio(closed, total) + ", realized " + ratio(realized, total));
}

// 3 ------------------------------------------------------------------------

void evaluation_identity(const std::vector<Fixture>& fx)
{
    std::mt19937_64 rng(3);
    std::size_t agree = 0, pairs = 0, vanish = 0, bounds = 0;
    for (const auto& f : fx) {
        const auto& c = f.complex;
        const IntersectionOracle oracle(c);
        const HomologyBasis h1(c, 1), h2(c, 2);
        for (int m = 1; m <= 2; ++m) {
            const auto& hx = m == 1 ? h1 : h2;
            const auto& hy = m == 1 ? h2 : h1;
            for (int i = 0; i < 50; ++i) {
                const auto x = random_cycle(c, hx, rng, 0.05);
                const auto y = random_cycle(c, hy, rng, 0.05);
                const auto j = cocycle(c, x);
                ++pairs;
                if (evaluate(j, y) == oracle.intersection(x, y)) ++agree;
                ++bounds;
                if (!evaluate(j, boundary(c, random_chain(c, 4 - m, rng, 0.2)))) ++vanish;
            }
        }
    }
    report(3, "evaluation matches the oracle and vanishes on boundaries", agree == pairs && vanish == bounds,
           "pairs " + ratio(agree, pairs) + ", boundaries " + ratio(vanish, bounds));
}

// 4 ------------------------------------------------------------------------

void vertex_table_consistency()
{
    const auto c = gen_t3(3);
    const HomologyBasis h2(c, 2);
    std::mt19937_64 rng(4);
    std::vector<Chain> xs = h2.representatives();
    for (int i = 0; i < 20; ++i) xs.push_back(random_cycle(c, h2, rng, 0.1));

    std::size_t checked = 0, good = 0;
    for (const auto& x : xs) {
        const auto j = cocycle_from_2cycle(c, x);
        for (SimplexId e = 0; e < c.num_edges(); ++e) {
            const auto [u, v] = c.edge(e);
            const auto tets = c.cofaces(1, e, 2);
            for (std::size_t a = 0; a < tets.size(); ++a)
                for (std::size_t b = a + 1; b < tets.size(); ++b) {
                    ++checked;
                    const bool sa = j.aux_value(c, u, tets[a]) ^ j.aux_value(c, v, tets[a]);
                    const bool sb = j.aux_value(c, u, tets[b]) ^ j.aux_value(c, v, tets[b]);
                    if (sa == sb) ++good;
                }
        }
    }
    report(4, "edge values are independent of the incident tet", good == checked,
           ratio(good, checked) + " tet pairs over " + std::to_string(xs.size()) + " cycles");
}

// 5 ------------------------------------------------------------------------

void known_topology(const std::vector<Fixture>& fx)
{
    const std::vector<std::array<std::size_t, 4>> expected{{1, 0, 0, 1}, {1, 3, 3, 1}, {1, 3, 3, 1}, {1, 1, 1, 1}};
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < fx.size(); ++i) {
        const auto& c = fx[i].complex;
        const auto b = betti_numbers(c);
        const HomologyBasis h1(c, 1), h2(c, 2);
        const std::size_t r = h1.rank();
        bool invertible = h2.rank() == r;
        if (invertible && r > 0) {
            Gf2Matrix p(r, r);
            for (std::size_t a = 0; a < r; ++a) {
                const auto j = cocycle_from_2cycle(c, h2.representatives()[a]);
                for (std::size_t k = 0; k < r; ++k) p.set(a, k, evaluate(j, h1.representatives()[k]));
            }
            invertible = p.inverse().has_value();
        }
        ok = ok && b == expected[i] && invertible;
        detail += (i ? ", " : "") + fx[i].name + " (" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," +
                  std::to_string(b[2]) + "," + std::to_string(b[3]) + ")" + (invertible ? "" : " singular");
    }
    report(5, "betti numbers and nondegenerate pairing", ok, detail);
}

// 6 ------------------------------------------------------------------------

/// Per-call time of `call`, taken as the median of 5 runs. Each run repeats
/// the call `reps` times. Runs of the different sizes are interleaved so that
/// machine-wide slowdowns hit every size alike.
std::vector<double> median_times(const std::vector<std::function<void()>>& calls)
{
    std::vector<std::size_t> reps(calls.size(), 1);
    for (std::size_t i = 0; i < calls.size(); ++i)
        for (;;) {
            const auto start = Clock::now();
            for (std::size_t k = 0; k < reps[i]; ++k) calls[i]();
            if (seconds_since(start) > 0.05) break;
            reps[i] *= 2;
        }
    std::vector<std::vector<double>> runs(calls.size());
    for (int r = 0; r < 5; ++r)
        for (std::size_t i = 0; i < calls.size(); ++i) {
            const auto start = Clock::now();
            for (std::size_t k = 0; k < reps[i]; ++k) calls[i]();
            runs[i].push_back(seconds_since(start) / static_cast<double>(reps[i]));
        }
    std::vector<double> medians;
    for (auto& v : runs) {
        std::sort(v.begin(), v.end());
        medians.push_back(v[2]);
    }
    return medians;
}

void scaling()
{
    const std::vector<int> qs{4, 5, 6, 8};
    std::vector<Complex3> meshes;
    std::vector<double> n3;
    for (int q : qs) {
        meshes.push_back(gen_t3(q));
        n3.push_back(static_cast<double>(meshes.back().num_tets()));
    }
    std::vector<std::function<void()>> alg1, alg2;
    for (const auto& c : meshes) {
        alg1.push_back([&c, x = boundary(c, Chain(2, {0}))] { (void)cocycle_from_1cycle(c, x); });
        alg2.push_back([&c, x = boundary(c, Chain(3, {0}))] { (void)cocycle_from_2cycle(c, x); });
    }
    const auto t1 = median_times(alg1);
    const auto t2 = median_times(alg2);

    bool ok = true;
    std::string detail;
    auto check = [&](const std::vector<double>& t, const char* name) {
        detail += std::string(detail.empty() ? "" : "; ") + name;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            detail += " q" + std::to_string(qs[i]) + "=" + fixed(t[i] * 1e6, 1) + "us";
            for (std::size_t k = 0; k < i; ++k) {
                const double allowed = std::pow(2.6, std::log2(n3[i] / n3[k]));
                if (t[i] / t[k] > allowed) {
                    ok = false;
                    detail += " [q" + std::to_string(qs[k]) + "->q" + std::to_string(qs[i]) + " x" +
                              fixed(t[i] / t[k]) + " > " + fixed(allowed) + "]";
                }
            }
        }
    };
    check(t1, "1-cycle");
    check(t2, "2-cycle");
    report(6, "near-linear scaling in N3", ok, detail);
}

// 7 ------------------------------------------------------------------------

Walk shortest_walk(const Complex3& c, VertexId from, VertexId to)
{
    std::vector<VertexId> parent(c.num_vertices(), static_cast<VertexId>(-1));
    std::queue<VertexId> queue;
    parent[from] = from;
    queue.push(from);
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop();
        for (auto e : c.cofaces(0, v, 1)) {
            const auto& ends = c.edge(e);
            const VertexId w = ends[0] == v ? ends[1] : ends[0];
            if (parent[w] != static_cast<VertexId>(-1)) continue;
            parent[w] = v;
            queue.push(w);
        }
    }
    Walk w{to};
    while (w.back() != from) w.push_back(parent[w.back()]);
    std::reverse(w.begin(), w.end());
    return w;
}

/// Length of the shortest walk homologous to `walk` with the same endpoints,
/// by enumerating all walks of length 0, 1, 2, ...
std::size_t exhaustive_min_length(const Complex3& c, const BoundarySpace& bounds, const Walk& walk)
{
    const Chain y = walk_chain(c, walk);
    Walk cur{walk.front()};
    std::function<bool(std::size_t)> extend = [&](std::size_t left) {
        if (left == 0) return cur.back() == walk.back() && bounds.contains(y + walk_chain(c, cur));
        for (auto e : c.cofaces(0, cur.back(), 1)) {
            const auto& ends = c.edge(e);
            cur.push_back(ends[0] == cur.back() ? ends[1] : ends[0]);
            const bool found = extend(left - 1);
            cur.pop_back();
            if (found) return true;
        }
        return false;
    };
    for (std::size_t len = 0;; ++len)
        if (extend(len)) return len;
}

void covering_suite()
{
    const auto start = Clock::now();
    const auto c = gen_t3(3);
    const IndexSystem s(c);
    const BoundarySpace bounds(c, 1);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(c.num_vertices() - 1));

    std::size_t endpoint = 0;
    for (int i = 0; i < 100; ++i) {
        const auto w = random_walk(c, vertex(rng), 1 + rng() % 20, rng);
        BitVector k0(s.rank());
        for (std::size_t b = 0; b < s.rank(); ++b)
            if (rng() & 1) k0.set(b);
        if (lift_path(s, w, k0).back().k == (k0 ^ s.index_of(walk_chain(c, w)))) ++endpoint;
    }

    std::size_t homologous = 0, yes = 0;
    for (int i = 0; i < 100; ++i) {
        const auto a = random_walk(c, vertex(rng), 1 + rng() % 8, rng);
        auto b = random_walk(c, a.front(), rng() % 8, rng);
        const auto tail = shortest_walk(c, b.back(), a.back());
        b.insert(b.end(), tail.begin() + 1, tail.end());
        const auto y = walk_chain(c, a), z = walk_chain(c, b);
        const bool fast = chains_homologous(s, y, z);
        if (fast == is_boundary(c, y + z)) ++homologous;
        if (fast) ++yes;
    }

    std::size_t minimal = 0;
    const WeightFunction unit(c);
    for (int i = 0; i < 20; ++i) {
        const auto y = random_walk(c, vertex(rng), 2 + rng() % 7, rng);
        const auto z = min_homologous_path(s, y, unit);
        const bool valid = z.vertices.front() == y.front() && z.vertices.back() == y.back() &&
                           bounds.contains(walk_chain(c, y) + walk_chain(c, z.vertices));
        if (valid && z.weight == static_cast<double>(exhaustive_min_length(c, bounds, y))) ++minimal;
    }

    const std::size_t nodes = lifted_vertex_count(s);
    bool guard = nodes == (std::size_t{1} << s.rank()) * c.num_vertices();
    try {
        (void)min_homologous_path(s, Walk{0, 1}, unit, nodes - 1);
        guard = false;
    } catch (const Error& e) {
        guard = guard && e.code() == ErrorCode::RankGuardExceeded;
    }
    try {
        (void)min_homologous_path(s, Walk{0, 1}, unit, nodes);
    } catch (const Error&) {
        guard = false;
    }

    const double t = seconds_since(start);
    report(7, "covering suite",
           endpoint == 100 && homologous == 100 && minimal == 20 && guard && t < 120.0,
           "endpoint " + ratio(endpoint, 100) + ", homology test " + ratio(homologous, 100) + " (" +
               std::to_string(yes) + " homologous), min path " + ratio(minimal, 20) + ", rank guard " +
               (guard ? "ok" : "broken") + ", " + fixed(t) + " s");
}

// 8 ------------------------------------------------------------------------

struct Captured {
    int status = -1;
    std::string out;
};

Captured capture(const std::string& command)
{
    Captured r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    r.status = pclose(pipe);
    return r;
}

void determinism()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("tetdual_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = TETDUAL_CLI_PATH;
    auto file = [&](const std::string& name) { return "'" + (dir / name).string() + "'"; };

    const std::vector<std::string> setup{
        cli + " gen t3:3 -o " + file("t3.tetmesh"),
        cli + " homology " + file("t3.tetmesh") + " --dim 1 -o " + file("h1.chain"),
        cli + " homology " + file("t3.tetmesh") + " --dim 2 -o " + file("h2.chain"),
        cli + " sample " + file("t3.tetmesh") + " --dim 1 --seed 1 -o " + file("y.chain"),
        cli + " sample " + file("t3.tetmesh") + " --dim 1 --seed 2 -o " + file("z.chain"),
        cli + " sample " + file("t3.tetmesh") + " --dim 2 --seed 3 -o " + file("x.chain"),
        cli + " sample " + file("t3.tetmesh") + " --walk 9 --seed 4 -o " + file("w.path"),
    };
    bool ok = true;
    for (const auto& cmd : setup) ok = ok && capture(cmd).status == 0;

    const std::vector<std::string> commands{
        cli + " validate " + file("t3.tetmesh"),
        cli + " homology " + file("t3.tetmesh") + " --dim 1",
        cli + " homology " + file("t3.tetmesh") + " --dim 2",
        cli + " cocycle " + file("t3.tetmesh") + " " + file("y.chain"),
        cli + " cocycle " + file("t3.tetmesh") + " " + file("x.chain"),
        cli + " intersect " + file("t3.tetmesh") + " " + file("x.chain") + " " + file("h1.chain") + " --oracle",
        cli + " intersect " + file("t3.tetmesh") + " " + file("y.chain") + " " + file("h2.chain"),
        cli + " index " + file("t3.tetmesh") + " " + file("y.chain"),
        cli + " homologous " + file("t3.tetmesh") + " " + file("y.chain") + " " + file("z.chain"),
        cli + " minpath " + file("t3.tetmesh") + " " + file("w.path"),
        cli + " gen t3:4",
        cli + " gen s3",
        cli + " sample " + file("t3.tetmesh") + " --dim 2 --count 3 --seed 5",
    };
    std::size_t same = 0;
    for (const auto& cmd : commands) {
        const auto a = capture(cmd), b = capture(cmd);
        if (a.status == 0 && a.status == b.status && !a.out.empty() && a.out == b.out) ++same;
    }
    fs::remove_all(dir);
    report(8, "repeated CLI runs are byte-identical", ok && same == commands.size(),
           ratio(same, commands.size()) + " subcommand invocations");
}

} // namespace

int main()
{
    try {
        const auto fx = fixtures();
        basis_pairs(fx);
        cocycle_suite(fx);
        evaluation_identity(fx);
        vertex_table_consistency();
        known_topology(fx);
        scaling();
        covering_suite();
        determinism();
    } catch (const std::exception& e) {
        std::cout << "FAIL  acceptance aborted: " << e.what() << std::endl;
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
