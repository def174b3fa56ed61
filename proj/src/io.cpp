#include "bcds/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bcds/errors.hpp"

namespace bcds {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Splits on runs of blanks and parses every token as a nonnegative integer.
std::vector<long long> integers(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    long long value = 0;
    const auto* begin = line.data() + pos;
    const auto* stop = line.data() + end;
    auto [ptr, ec] = std::from_chars(begin, stop, value);
    if (ec != std::errc() || ptr != stop || value < 0) {
      throw InputError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                       std::string(begin, stop) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Graph parse_instance(std::string_view text) {
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  EdgeSet edges;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    line = trim(line.substr(0, line.find('#')));  // comments run to end of line
    ++line_no;
    start = stop + 1;
    if (line.empty()) continue;

    if (!have_header) {
      if (line.front() != 'p') throw InputError("line " + std::to_string(line_no) + ": expected 'p <n> <m>' header");
      auto values = integers(line.substr(1), line_no);
      if (values.size() != 2) throw InputError("line " + std::to_string(line_no) + ": header needs exactly n and m");
      n = values[0];
      m = values[1];
      if (n > (1 << 30) || m > (1LL << 31)) throw InputError("instance too large");
      have_header = true;
      continue;
    }
    auto values = integers(line, line_no);
    if (values.size() != 2) throw InputError("line " + std::to_string(line_no) + ": edge lines need exactly two ids");
    if (values[0] >= n || values[1] >= n) {
      throw InputError("line " + std::to_string(line_no) + ": vertex id out of range for n=" + std::to_string(n));
    }
    if (values[0] == values[1]) throw InputError("line " + std::to_string(line_no) + ": self-loop");
    edges.push_back({static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1])});
  }
  if (!have_header) throw InputError("missing 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                     " were listed");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string format_instance(const Graph& g) {
  std::string out = "p " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

SetSystem parse_set_system_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("set system JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("sets")) {
    throw InputError("set system JSON needs keys \"n\" and \"sets\"");
  }
  SetSystem sys;
  try {
    sys.universe_size = doc.at("n").get<int>();
    sys.sets = doc.at("sets").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("set system JSON: ") + e.what());
  }
  sys.validate();
  return sys;
}

std::string format_set_system_json(const SetSystem& sys) {
  nlohmann::json doc = {{"n", sys.universe_size}, {"sets", sys.sets}};
  return doc.dump();
}

}  // namespace bcds
