#pragma once

#include "pcg/geometry.hpp"
#include "pcg/graph.hpp"
#include "pcg/threshold_tolerance.hpp"
#include "pcg/tree.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcg::text {

// Line-oriented formats. `#` starts a comment; tokens are whitespace separated;
// numbers are `p/q` rationals or integers. Writers always emit `p/q`.

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph <n> / node <name> / edge <u> <v>
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);
std::string write_dot(const Graph& g);

// tree / tnode <name> / leaf <tree-node> <graph-node> / tedge <u> <v> <w>
// plus dmin <r> and dmax <r> for witnesses.
WeightedTree parse_tree(std::string_view text);
PCGWitness parse_witness(std::string_view text);
std::string write_tree(const WeightedTree& t);
std::string write_witness(const PCGWitness& w);

// ttgraph / node <name> g=<r> t=<r>
// threshold <t> / node <name> a=<r>
struct ThresholdFile {
    std::vector<ThresholdNode> nodes;
    Rational threshold;
};
struct TTFile {
    TTInstance instance;
    /// Set when the file used the threshold variant; `instance` is then the
    /// equivalent constant-tolerance instance.
    std::optional<ThresholdFile> threshold;
};
TTFile parse_tt(std::string_view text);
std::string write_tt(const TTInstance& inst);
std::string write_threshold(const ThresholdFile& t);

// model <2d|3d> followed by disk/hseg/vseg/arc/rect/box/spp/sppseg lines.
geometry::GeometricModel parse_model(std::string_view text);
std::string write_model(const geometry::GeometricModel& m);

/// Throws IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace pcg::text
