#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;
using namespace tetdual;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "tetdual");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Workdir {
public:
    Workdir() : dir_(fs::temp_directory_path() / ("tetdual_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Workdir() { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path(name)) << text;
        return path(name);
    }

private:
    fs::path dir_;
};

std::string chain_text(const Complex3& c, const Chain& x)
{
    std::ostringstream ss;
    io::write_chain(ss, c, x);
    return ss.str();
}

} // namespace

TEST_CASE("gen and homology")
{
    Workdir wd;
    CHECK(run({"gen", "s3", "-o", wd.path("s3.tetmesh")}).code == 0);
    CHECK(run({"homology", wd.path("s3.tetmesh"), "--dim", "1"}).out == "rank 0\n");

    CHECK(run({"gen", "t3:3", "-o", wd.path("t3.tetmesh")}).code == 0);
    const auto h1 = run({"homology", wd.path("t3.tetmesh"), "--dim", "1"});
    CHECK(h1.code == 0);
    CHECK(h1.out.starts_with("rank 3\nchain 1 "));
    const auto h3 = run({"homology", wd.path("t3.tetmesh"), "--dim", "3"});
    CHECK(h3.out.starts_with("rank 1\nchain 3 162\n"));

    const auto g = run({"gen", "t3:3"});
    CHECK(g.out.starts_with("tetmesh 27 162\n"));
    CHECK(run({"gen", "t3:2"}).code == 1);
    CHECK(run({"gen", "cube"}).code == 1);
}

TEST_CASE("validate")
{
    Workdir wd;
    run({"gen", "s3", "-o", wd.path("s3.tetmesh")});
    CHECK(run({"validate", wd.path("s3.tetmesh")}).out == "PASS\n");

    const auto bad = wd.write("tet.tetmesh", "tetmesh 4 1\ntet 0 1 2 3\n");
    const auto r = run({"validate", bad});
    CHECK(r.code == 1);
    CHECK(r.out.starts_with("FAIL triangle-cofaces: "));

    const auto garbage = wd.write("junk.tetmesh", "tetmesh 4 1\ntet 0 1 2\n");
    const auto p = run({"validate", garbage});
    CHECK(p.code == 1);
    CHECK(p.out.empty());
    CHECK(p.err.find("line 2") != std::string::npos);

    CHECK(run({"homology", bad, "--dim", "1"}).code == 1);
}

TEST_CASE("intersect, cocycle and index on the grid torus")
{
    Workdir wd;
    const auto mesh = wd.path("t3.tetmesh");
    run({"gen", "t3:3", "-o", mesh});
    const auto c = gen_t3(3);
    const auto loop = wd.write("loop.chain", chain_text(c, fixtures::axis_loop(c, 3, 0)));
    const auto tori = wd.write("tori.chain", chain_text(c, fixtures::coordinate_torus(c, 3, 0, 1)) +
                                                 chain_text(c, fixtures::coordinate_torus(c, 3, 1, 1)));

    CHECK(run({"intersect", mesh, loop, tori}).out == "1\n0\n");
    const auto o = run({"intersect", mesh, loop, tori, "--oracle"});
    CHECK(o.code == 0);
    CHECK(o.out == "1\n0\noracle agree\n");
    CHECK(run({"intersect", mesh, tori, loop}).out == "1\n");

    const auto cc = run({"cocycle", mesh, loop});
    CHECK(cc.code == 0);
    CHECK(cc.out.starts_with("cochain 2 "));

    const auto idx = run({"index", mesh, loop});
    CHECK(idx.code == 0);
    CHECK(idx.out.size() == 4);
    CHECK(idx.out != "000\n");

    const auto shifted = wd.write("shift.chain", chain_text(c, fixtures::axis_loop(c, 3, 0, {0, 2, 1})));
    CHECK(run({"homologous", mesh, loop, shifted}).out == "yes\n");
    const auto other = wd.write("other.chain", chain_text(c, fixtures::axis_loop(c, 3, 2)));
    CHECK(run({"homologous", mesh, loop, other}).out == "no\n");

    const auto open = wd.write("open.chain", "chain 1 1\n0 1\n");
    const auto mismatch = run({"homologous", mesh, loop, open});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.err.find("BoundaryMismatch") != std::string::npos);
    CHECK(run({"intersect", mesh, open, tori}).code == 1);
}

TEST_CASE("minpath")
{
    Workdir wd;
    const auto mesh = wd.path("t3.tetmesh");
    run({"gen", "t3:3", "-o", mesh});
    using fixtures::grid;
    std::ostringstream p;
    p << "path 5\n";
    for (auto v : {grid(3, {0, 0, 0}), grid(3, {1, 0, 0}), grid(3, {1, 1, 0}), grid(3, {2, 1, 0}),
                   grid(3, {2, 0, 0})})
        p << v << ' ';
    p << grid(3, {0, 0, 0}) << '\n';
    const auto path = wd.write("detour.path", p.str());

    const auto r = run({"minpath", mesh, path});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("path 3\n0 "));
    CHECK(r.out.ends_with("\nweight 3\n"));

    const auto weights = wd.write("w.txt", "edge 0 2 5\nedge 0 1 0.5\n");
    const auto rw = run({"minpath", mesh, path, "--weights", weights});
    CHECK(rw.code == 0);

    const auto guard = run({"minpath", mesh, path, "--node-budget", "100"});
    CHECK(guard.code == 2);
    CHECK(guard.err.find("RankGuardExceeded") != std::string::npos);

    const auto broken = wd.write("broken.path", "path 1\n0 7\n");
    const auto nb = run({"minpath", mesh, broken});
    CHECK(nb.code == 1);
    CHECK(nb.err.find("NotAPath") != std::string::npos);
    const auto truncated = wd.write("short.path", "path 2\n0 1\n");
    CHECK(run({"minpath", mesh, truncated}).err.find("ParseError") != std::string::npos);
}

TEST_CASE("sample is reproducible for a seed")
{
    Workdir wd;
    const auto mesh = wd.path("t3.tetmesh");
    run({"gen", "t3:3", "-o", mesh});
    const auto a = run({"sample", mesh, "--dim", "2", "--count", "3", "--seed", "9"});
    const auto b = run({"sample", mesh, "--dim", "2", "--count", "3", "--seed", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run({"sample", mesh, "--dim", "2", "--count", "3", "--seed", "10"}).out);

    const auto w = run({"sample", mesh, "--walk", "5", "--seed", "1"});
    CHECK(w.out.starts_with("path 5\n"));
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"homology"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
