#include "tetdual/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "tetdual/error.hpp"

namespace tetdual::io {

namespace {

/// Yields meaningful lines (comments and blanks skipped) with line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::istringstream& line)
    {
        std::string text;
        while (std::getline(in_, text)) {
            ++number_;
            const auto first = text.find_first_not_of(" \t\r");
            if (first == std::string::npos || text[first] == '#') continue;
            line.clear();
            line.str(text);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(number_) + ": " + what);
    }

    std::size_t line() const { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

void expect_keyword(LineReader& reader, std::istringstream& line, const std::string& keyword)
{
    std::string word;
    if (!(line >> word) || word != keyword) reader.fail("expected '" + keyword + "'");
}

void expect_end(LineReader& reader, std::istringstream& line)
{
    std::string extra;
    if (line >> extra) reader.fail("unexpected trailing token '" + extra + "'");
}

template <typename T>
T read_number(LineReader& reader, std::istringstream& line, const char* what)
{
    T value{};
    if (!(line >> value)) reader.fail(std::string("expected ") + what);
    return value;
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return in;
}

std::pair<int, std::size_t> parse_header(LineReader& reader, std::istringstream& line, const std::string& keyword)
{
    expect_keyword(reader, line, keyword);
    const auto dim = read_number<long>(reader, line, "dimension");
    const auto count = read_number<long>(reader, line, "count");
    expect_end(reader, line);
    if (dim < 0 || dim > 3 || count < 0) reader.fail("bad dimension or count");
    return {static_cast<int>(dim), static_cast<std::size_t>(count)};
}

std::pair<int, std::size_t> read_header(LineReader& reader, const std::string& keyword)
{
    std::istringstream line;
    if (!reader.next(line)) reader.fail("missing '" + keyword + "' header");
    return parse_header(reader, line, keyword);
}

std::vector<SimplexId> read_simplices(LineReader& reader, const Complex3& c, int dim, std::size_t count)
{
    std::vector<SimplexId> ids;
    std::istringstream line;
    for (std::size_t i = 0; i < count; ++i) {
        if (!reader.next(line)) reader.fail("expected " + std::to_string(count) + " simplices");
        std::vector<VertexId> verts;
        for (int k = 0; k <= dim; ++k) {
            const auto v = read_number<long>(reader, line, "vertex id");
            if (v < 0 || static_cast<std::size_t>(v) >= c.num_vertices()) reader.fail("vertex id out of range");
            verts.push_back(static_cast<VertexId>(v));
        }
        expect_end(reader, line);
        try {
            const Simplex s{std::span<const VertexId>(verts)};
            const auto id = c.find(s);
            if (!id) reader.fail(to_string(s) + " is not a simplex of the mesh");
            ids.push_back(*id);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError) throw;
            reader.fail(e.what());
        }
    }
    return ids;
}

void write_simplex(std::ostream& out, const Simplex& s)
{
    const auto v = s.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
}

} // namespace

Complex3 read_mesh(std::istream& in)
{
    LineReader reader(in);
    std::istringstream line;
    if (!reader.next(line)) reader.fail("missing 'tetmesh' header");
    expect_keyword(reader, line, "tetmesh");
    const auto n0 = read_number<long>(reader, line, "vertex count");
    const auto n3 = read_number<long>(reader, line, "tet count");
    expect_end(reader, line);
    if (n0 < 0 || n3 < 0) reader.fail("negative count");

    std::vector<Tet> tets;
    tets.reserve(static_cast<std::size_t>(n3));
    for (long i = 0; i < n3; ++i) {
        if (!reader.next(line)) reader.fail("expected " + std::to_string(n3) + " tets");
        expect_keyword(reader, line, "tet");
        Tet t{};
        for (auto& v : t) {
            const auto id = read_number<long>(reader, line, "vertex id");
            if (id < 0 || id >= n0) reader.fail("vertex id " + std::to_string(id) + " out of range");
            v = static_cast<VertexId>(id);
        }
        expect_end(reader, line);
        tets.push_back(t);
    }
    if (reader.next(line)) reader.fail("unexpected content after the last tet");
    return Complex3::build(tets, static_cast<std::size_t>(n0));
}

void write_mesh(std::ostream& out, const Complex3& c)
{
    out << "tetmesh " << c.num_vertices() << ' ' << c.num_tets() << '\n';
    for (SimplexId t = 0; t < c.num_tets(); ++t) {
        const auto& v = c.tet(t);
        out << "tet " << v[0] << ' ' << v[1] << ' ' << v[2] << ' ' << v[3] << '\n';
    }
}

Chain read_chain(std::istream& in, const Complex3& c)
{
    LineReader reader(in);
    const auto [dim, count] = read_header(reader, "chain");
    auto ids = read_simplices(reader, c, dim, count);
    return Chain(dim, std::move(ids));
}

std::vector<Chain> read_chains(std::istream& in, const Complex3& c)
{
    LineReader reader(in);
    std::vector<Chain> chains;
    std::istringstream line;
    while (reader.next(line)) {
        const auto [dim, count] = parse_header(reader, line, "chain");
        chains.emplace_back(dim, read_simplices(reader, c, dim, count));
    }
    if (chains.empty()) reader.fail("missing 'chain' header");
    return chains;
}

void write_chain(std::ostream& out, const Complex3& c, const Chain& x)
{
    out << "chain " << x.dim() << ' ' << x.size() << '\n';
    for (auto s : x.simplices()) write_simplex(out, c.simplex(x.dim(), s));
}

Cochain read_cochain(std::istream& in, const Complex3& c)
{
    LineReader reader(in);
    const auto [dim, count] = read_header(reader, "cochain");
    auto ids = read_simplices(reader, c, dim, count);
    return Cochain(dim, std::move(ids));
}

void write_cochain(std::ostream& out, const Complex3& c, const Cochain& j)
{
    out << "cochain " << j.dim() << ' ' << j.support().size() << '\n';
    for (auto s : j.support()) write_simplex(out, c.simplex(j.dim(), s));
}

Walk read_path(std::istream& in)
{
    LineReader reader(in);
    std::istringstream line;
    if (!reader.next(line)) reader.fail("missing 'path' header");
    expect_keyword(reader, line, "path");
    const auto q = read_number<long>(reader, line, "path length");
    expect_end(reader, line);
    if (q < 0) reader.fail("negative path length");
    Walk walk;
    while (walk.size() < static_cast<std::size_t>(q) + 1 && reader.next(line)) {
        long v = 0;
        while (line >> v) {
            if (v < 0) reader.fail("negative vertex id");
            walk.push_back(static_cast<VertexId>(v));
        }
        if (!line.eof()) reader.fail("bad vertex id");
    }
    if (walk.size() != static_cast<std::size_t>(q) + 1)
        reader.fail("expected " + std::to_string(q + 1) + " vertex ids, got " + std::to_string(walk.size()));
    return walk;
}

void write_path(std::ostream& out, const Walk& walk)
{
    out << "path " << (walk.empty() ? 0 : walk.size() - 1) << '\n';
    for (std::size_t i = 0; i < walk.size(); ++i) out << (i ? " " : "") << walk[i];
    out << '\n';
}

void write_weighted_path(std::ostream& out, const WeightedPath& path)
{
    write_path(out, path.vertices);
    out << "weight " << format_double(path.weight) << '\n';
}

WeightFunction read_weights(std::istream& in, const Complex3& c)
{
    LineReader reader(in);
    WeightFunction weights(c);
    std::istringstream line;
    while (reader.next(line)) {
        expect_keyword(reader, line, "edge");
        const auto u = read_number<long>(reader, line, "vertex id");
        const auto v = read_number<long>(reader, line, "vertex id");
        const auto w = read_number<double>(reader, line, "weight");
        expect_end(reader, line);
        if (u < 0 || v < 0) reader.fail("negative vertex id");
        const auto e = c.find_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        if (!e) reader.fail("no edge " + std::to_string(u) + " " + std::to_string(v));
        try {
            weights.set(*e, w);
        } catch (const Error& err) {
            reader.fail(err.what());
        }
    }
    return weights;
}

std::string format_double(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

Complex3 load_mesh(const std::string& path)
{
    auto in = open(path);
    return read_mesh(in);
}

Chain load_chain(const std::string& path, const Complex3& c)
{
    auto in = open(path);
    return read_chain(in, c);
}

std::vector<Chain> load_chains(const std::string& path, const Complex3& c)
{
    auto in = open(path);
    return read_chains(in, c);
}

Walk load_path(const std::string& path)
{
    auto in = open(path);
    return read_path(in);
}

WeightFunction load_weights(const std::string& path, const Complex3& c)
{
    auto in = open(path);
    return read_weights(in, c);
}

} // namespace tetdual::io
