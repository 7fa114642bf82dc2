#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>

#include "tetdual/covering.hpp"
#include "tetdual/duality.hpp"
#include "tetdual/error.hpp"
#include "tetdual/io.hpp"
#include "tetdual/mesh.hpp"
#include "tetdual/sampling.hpp"

namespace tetdual::cli {

namespace {

std::string_view failure_name(ValidationFailure f)
{
    switch (f) {
    case ValidationFailure::None: return "none";
    case ValidationFailure::TriangleCofaces: return "triangle-cofaces";
    case ValidationFailure::EdgeLink: return "edge-link";
    case ValidationFailure::VertexLink: return "vertex-link";
    case ValidationFailure::Disconnected: return "disconnected";
    }
    return "unknown";
}

Complex3 generate(const std::string& name)
{
    if (name == "s3") return gen_s3();
    if (name.starts_with("t3:")) {
        int q = 0;
        const auto* first = name.data() + 3;
        const auto* last = name.data() + name.size();
        const auto [ptr, ec] = std::from_chars(first, last, q);
        if (ec == std::errc{} && ptr == last && first != last) return gen_t3(q);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown fixture '" + name + "' (expected s3 or t3:<q>)");
}

Complex3 load_valid_mesh(const std::string& path)
{
    auto c = io::load_mesh(path);
    if (!c.is_closed_manifold())
        throw Error(ErrorCode::NotValidated, "mesh is not a closed 3-manifold: " + c.validation().witness);
    return c;
}

std::string bits_string(const BitVector& k)
{
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) s += k.test(i) ? '1' : '0';
    return s;
}

/// Writes to the named file, or to `out` when the name is empty.
void emit(const std::string& file, std::ostream& out, const std::function<void(std::ostream&)>& write)
{
    if (file.empty()) {
        write(out);
        return;
    }
    std::ofstream f(file);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + file + "'");
    write(f);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Z2 homology, intersection cocycles and homologous paths on closed 3-manifold meshes", "tetdual"};
    app.require_subcommand(1, 1);

    std::string mesh, x_file, y_file, z_file, path_file, weights_file, output, fixture;
    int dim = 1;
    bool use_oracle = false;
    std::size_t node_budget = kDefaultNodeBudget;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::size_t walk_steps = 0;
    double density = 0.1;

    auto* validate = app.add_subcommand("validate", "Check that a mesh is a closed 3-manifold");
    validate->add_option("mesh", mesh, "Mesh file")->required();

    auto* homology = app.add_subcommand("homology", "Rank and representative cycles of H_m");
    homology->add_option("mesh", mesh, "Mesh file")->required();
    homology->add_option("--dim", dim, "Homology dimension (0-3)")->check(CLI::Range(0, 3));
    homology->add_option("-o,--output", output, "Write representatives here instead of stdout");

    auto* cocycle = app.add_subcommand("cocycle", "Cocycle dual to a 1- or 2-cycle");
    cocycle->add_option("mesh", mesh, "Mesh file")->required();
    cocycle->add_option("cycle", x_file, "Chain file")->required();
    cocycle->add_option("-o,--output", output, "Write the cochain here instead of stdout");

    auto* intersect = app.add_subcommand("intersect", "Intersection number of x with each chain in y");
    intersect->add_option("mesh", mesh, "Mesh file")->required();
    intersect->add_option("x", x_file, "Chain file with the m-cycle")->required();
    intersect->add_option("y", y_file, "Chain file with one or more (3-m)-cycles")->required();
    intersect->add_flag("--oracle", use_oracle, "Cross-check against the subdivision oracle");

    auto* index = app.add_subcommand("index", "Index vector of a 1-chain");
    index->add_option("mesh", mesh, "Mesh file")->required();
    index->add_option("chain", x_file, "Chain file")->required();

    auto* homologous = app.add_subcommand("homologous", "Whether two 1-chains with equal boundary are homologous");
    homologous->add_option("mesh", mesh, "Mesh file")->required();
    homologous->add_option("y", y_file, "Chain file")->required();
    homologous->add_option("z", z_file, "Chain file")->required();

    auto* minpath = app.add_subcommand("minpath", "Least-weight walk homologous to a given walk");
    minpath->add_option("mesh", mesh, "Mesh file")->required();
    minpath->add_option("path", path_file, "Path file")->required();
    minpath->add_option("--weights", weights_file, "Edge weight file");
    minpath->add_option("--node-budget", node_budget, "Maximum number of lifted vertices");

    auto* gen = app.add_subcommand("gen", "Write a fixture mesh (s3 or t3:<q>)");
    gen->add_option("fixture", fixture, "s3 or t3:<q>")->required();
    gen->add_option("-o,--output", output, "Output file instead of stdout");

    auto* sample = app.add_subcommand("sample", "Random test cycles or walks");
    sample->add_option("mesh", mesh, "Mesh file")->required();
    sample->add_option("--dim", dim, "Cycle dimension (1 or 2)")->check(CLI::Range(1, 2));
    sample->add_option("--count", count, "Number of cycles");
    sample->add_option("--density", density, "Probability of each simplex in the random bounding chain")
        ->check(CLI::Range(0.0, 1.0));
    sample->add_option("--walk", walk_steps, "Write a random walk with this many steps instead");
    sample->add_option("--seed", seed, "Random seed");
    sample->add_option("-o,--output", output, "Output file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitFailure;
    }

    try {
        if (validate->parsed()) {
            const auto c = io::load_mesh(mesh);
            const auto& report = c.validation();
            if (report.ok) {
                out << "PASS\n";
                return kExitOk;
            }
            out << "FAIL " << failure_name(report.failure) << ": " << report.witness << '\n';
            return kExitFailure;
        }
        if (gen->parsed()) {
            const auto c = generate(fixture);
            emit(output, out, [&](std::ostream& os) { io::write_mesh(os, c); });
            return kExitOk;
        }

        const auto c = load_valid_mesh(mesh);

        if (homology->parsed()) {
            const HomologyBasis basis(c, dim);
            out << "rank " << basis.rank() << '\n';
            emit(output, out, [&](std::ostream& os) {
                for (const auto& rep : basis.representatives()) io::write_chain(os, c, rep);
            });
            return kExitOk;
        }
        if (cocycle->parsed()) {
            const auto x = io::load_chain(x_file, c);
            if (x.dim() != 1 && x.dim() != 2)
                throw Error(ErrorCode::DimensionMismatch, "cocycle needs a 1- or 2-cycle");
            const auto j = x.dim() == 1 ? cocycle_from_1cycle(c, x) : cocycle_from_2cycle(c, x);
            emit(output, out, [&](std::ostream& os) { io::write_cochain(os, c, j.values); });
            return kExitOk;
        }
        if (intersect->parsed()) {
            const auto x = io::load_chain(x_file, c);
            const auto ys = io::load_chains(y_file, c);
            if (x.dim() != 1 && x.dim() != 2)
                throw Error(ErrorCode::DimensionMismatch, "x must be a 1- or 2-cycle");
            const auto j = x.dim() == 1 ? cocycle_from_1cycle(c, x) : cocycle_from_2cycle(c, x);
            std::vector<bool> values;
            for (const auto& y : ys) {
                if (!is_cycle(c, y)) throw Error(ErrorCode::NotACycle, "y is not a cycle");
                values.push_back(evaluate(j, y));
            }
            for (bool v : values) out << (v ? 1 : 0) << '\n';
            if (!use_oracle) return kExitOk;

            const IntersectionOracle oracle(c);
            std::size_t mismatches = 0;
            for (std::size_t i = 0; i < ys.size(); ++i)
                if (oracle.intersection(x, ys[i]) != values[i]) ++mismatches;
            if (mismatches == 0) {
                out << "oracle agree\n";
                return kExitOk;
            }
            out << "oracle mismatch " << mismatches << '\n';
            return kExitOracleMismatch;
        }
        if (index->parsed()) {
            const auto y = io::load_chain(x_file, c);
            const IndexSystem s(c);
            out << bits_string(s.index_of(y)) << '\n';
            return kExitOk;
        }
        if (homologous->parsed()) {
            const auto y = io::load_chain(y_file, c);
            const auto z = io::load_chain(z_file, c);
            const IndexSystem s(c);
            out << (chains_homologous(s, y, z) ? "yes" : "no") << '\n';
            return kExitOk;
        }
        if (minpath->parsed()) {
            const auto walk = io::load_path(path_file);
            const auto weights = weights_file.empty() ? WeightFunction(c) : io::load_weights(weights_file, c);
            const IndexSystem s(c);
            io::write_weighted_path(out, min_homologous_path(s, walk, weights, node_budget));
            return kExitOk;
        }
        if (sample->parsed()) {
            std::mt19937_64 rng(seed);
            if (walk_steps > 0) {
                std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(c.num_vertices() - 1));
                const auto start = pick(rng);
                const auto walk = random_walk(c, start, walk_steps, rng);
                emit(output, out, [&](std::ostream& os) { io::write_path(os, walk); });
                return kExitOk;
            }
            const HomologyBasis basis(c, dim);
            emit(output, out, [&](std::ostream& os) {
                for (std::size_t i = 0; i < count; ++i) io::write_chain(os, c, random_cycle(c, basis, rng, density));
            });
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::RankGuardExceeded ? kExitRankGuard : kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace tetdual::cli
