#ifndef BLOWUP_EDGE_LIST_H_
#define BLOWUP_EDGE_LIST_H_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blowup/graph.h"

namespace blowup {

// Edge-list text format:
//
//   n
//   u v
//   ...
//
// First non-comment line is the vertex count; each following non-empty line
// is one edge as two ASCII decimal ids. Lines starting with '#' are comments.
// The writer emits "u v" with u < v, sorted, newline-terminated.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

}  // namespace blowup

#endif  // BLOWUP_EDGE_LIST_H_
