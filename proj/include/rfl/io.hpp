#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "rfl/graph.hpp"
#include "rfl/rainbow.hpp"
#include "rfl/shifting.hpp"
#include "rfl/spectral.hpp"

namespace rfl {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph text format:
//   n <n>
//   <x> <y>        one edge per line, 1 <= x <= n < y <= 2n, any order
//   <blank line>   terminates the graph (end of input also does)
//
// Family text format:
//   family n=<n> k=<k>
//   followed by k*n graph blocks.

BipartiteGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const BipartiteGraph& g);

GraphFamily read_family(std::istream& in);
void write_family(std::ostream& out, const GraphFamily& family);

BipartiteGraph read_graph_file(const std::string& path);
GraphFamily read_family_file(const std::string& path);
void write_graph_file(const std::string& path, const BipartiteGraph& g);
void write_family_file(const std::string& path, const GraphFamily& family);

std::string graph_to_text(const BipartiteGraph& g);
std::string family_to_text(const GraphFamily& family);

nlohmann::json to_json(const Edge& e);
nlohmann::json to_json(const SpectralReport& r);
nlohmann::json to_json(const ShiftTrace& t);
nlohmann::json to_json(const RainbowFactor& f);
nlohmann::json to_json(const FactorValidation& v);

}  // namespace rfl
