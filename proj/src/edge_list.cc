#include "blowup/edge_list.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace blowup {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph read_edge_list(std::string_view text) {
  std::optional<GraphBuilder> builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!builder) {
      const auto n = fields.size() == 1 ? parse_uint(fields[0]) : std::nullopt;
      if (!n) throw EdgeListError(line_no, "expected vertex count, got '" + std::string(line) + "'");
      if (*n > (std::uint64_t{1} << 31)) throw EdgeListError(line_no, "vertex count too large");
      builder.emplace(static_cast<std::size_t>(*n));
      continue;
    }

    const auto u = fields.size() == 2 ? parse_uint(fields[0]) : std::nullopt;
    const auto v = fields.size() == 2 ? parse_uint(fields[1]) : std::nullopt;
    if (!u || !v) throw EdgeListError(line_no, "malformed edge '" + std::string(line) + "'");
    const std::uint64_t n = builder->order();
    if (*u >= n || *v >= n) {
      throw EdgeListError(line_no, "vertex id out of range for n=" + std::to_string(n));
    }
    if (*u == *v) throw EdgeListError(line_no, "self-loop at vertex " + std::to_string(*u));
    const auto a = static_cast<Vertex>(*u);
    const auto b = static_cast<Vertex>(*v);
    if (builder->has_edge(a, b)) {
      throw EdgeListError(line_no, "duplicate edge " + std::to_string(*u) + " " + std::to_string(*v));
    }
    builder->add_edge(a, b);
  }
  if (!builder) throw EdgeListError(line_no, "missing vertex count");
  return std::move(*builder).build();
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_edge_list(buf.str());
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_edge_list(g);
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace blowup
