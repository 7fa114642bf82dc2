#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tetdual/chains.hpp"
#include "tetdual/covering.hpp"
#include "tetdual/mesh.hpp"

namespace tetdual::io {

// Line-oriented text formats. Lines starting with '#' and blank lines are
// ignored everywhere. All readers throw Error(ParseError) with a line number.
//
//   tetmesh <N0> <N3>          chain <dim> <count>      path <q>
//   tet a b c d   (N3 lines)   v0 .. vdim (count lines) v0 v1 .. vq
//
//   cochain <dim> <count>      edge u v w   (weights; absent edges weigh 1)

Complex3 read_mesh(std::istream& in);
void write_mesh(std::ostream& out, const Complex3& c);

Chain read_chain(std::istream& in, const Complex3& c);
/// One or more chain blocks back to back.
std::vector<Chain> read_chains(std::istream& in, const Complex3& c);
void write_chain(std::ostream& out, const Complex3& c, const Chain& x);

Cochain read_cochain(std::istream& in, const Complex3& c);
void write_cochain(std::ostream& out, const Complex3& c, const Cochain& j);

Walk read_path(std::istream& in);
void write_path(std::ostream& out, const Walk& walk);
void write_weighted_path(std::ostream& out, const WeightedPath& path);

WeightFunction read_weights(std::istream& in, const Complex3& c);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

Complex3 load_mesh(const std::string& path);
Chain load_chain(const std::string& path, const Complex3& c);
std::vector<Chain> load_chains(const std::string& path, const Complex3& c);
Walk load_path(const std::string& path);
WeightFunction load_weights(const std::string& path, const Complex3& c);

} // namespace tetdual::io
