#include "rfl/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace rfl {

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

// Next line that is not blank; false at end of input.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!blank(line)) return true;
  }
  return false;
}

}  // namespace

BipartiteGraph read_graph(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("expected 'n <n>' header, got end of input");
  std::istringstream header(line);
  std::string tag;
  int n = 0;
  if (!(header >> tag >> n) || tag != "n") throw ParseError("bad graph header: '" + line + "'");

  std::vector<Edge> edges;
  while (std::getline(in, line) && !blank(line)) {
    std::istringstream row(line);
    Edge e;
    std::string extra;
    if (!(row >> e.x >> e.y) || (row >> extra)) throw ParseError("bad edge line: '" + line + "'");
    edges.push_back(e);
  }
  try {
    return BipartiteGraph(n, edges);
  } catch (const GraphError& err) {
    throw ParseError(err.what());
  }
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << "n " << g.n() << "\n";
  for (const Edge& e : g.edges()) out << e.x << " " << e.y << "\n";
  out << "\n";
}

GraphFamily read_family(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw ParseError("expected family header, got end of input");
  static const std::regex header(R"(\s*family\s+n=(\d+)\s+k=(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(line, m, header)) throw ParseError("bad family header: '" + line + "'");
  int n = std::stoi(m[1]), k = std::stoi(m[2]);
  std::vector<BipartiteGraph> members;
  for (int i = 0; i < k * n; ++i) {
    BipartiteGraph g = read_graph(in);
    if (g.n() != n) throw ParseError("member " + std::to_string(i + 1) + " has n=" + std::to_string(g.n()));
    members.push_back(std::move(g));
  }
  try {
    return GraphFamily(n, k, std::move(members));
  } catch (const GraphError& err) {
    throw ParseError(err.what());
  }
}

void write_family(std::ostream& out, const GraphFamily& family) {
  out << "family n=" << family.n() << " k=" << family.k() << "\n";
  for (const auto& g : family.members()) write_graph(out, g);
}

BipartiteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in);
}

GraphFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_family(in);
}

void write_graph_file(const std::string& path, const BipartiteGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, g);
}

void write_family_file(const std::string& path, const GraphFamily& family) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_family(out, family);
}

std::string graph_to_text(const BipartiteGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

std::string family_to_text(const GraphFamily& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

nlohmann::json to_json(const Edge& e) { return nlohmann::json::array({e.x, e.y}); }

nlohmann::json to_json(const SpectralReport& r) {
  return {{"value", r.value},
          {"method", to_string(r.method)},
          {"iterations", r.iterations},
          {"residual", r.residual},
          {"converged", r.converged}};
}

nlohmann::json to_json(const ShiftTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"part", s.part == Part::X ? "X" : "Y"}, {"x", s.x}, {"y", s.y}});
  }
  return steps;
}

nlohmann::json to_json(const RainbowFactor& f) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& a : f.assignment) list.push_back({{"graph", a.graph_index}, {"edge", to_json(a.edge)}});
  return {{"n", f.n}, {"k", f.k}, {"assignment", list}};
}

nlohmann::json to_json(const FactorValidation& v) {
  return {{"bijection", v.bijection},
          {"simple", v.simple},
          {"regular", v.regular},
          {"membership", v.membership},
          {"ok", v.ok()}};
}

}  // namespace rfl
