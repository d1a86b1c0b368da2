#ifndef BLOWUP_BLOWUP_H_
#define BLOWUP_BLOWUP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blowup/graph.h"

namespace blowup {

inline constexpr std::uint64_t kDefaultVertexCap = std::uint64_t{1} << 20;

enum class BaseFamily { kC4, kTheta222, kCustom };

std::string_view family_name(BaseFamily family);
std::optional<BaseFamily> parse_family(std::string_view name);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The k-cycle 0-1-...-(k-1)-0. Throws std::invalid_argument for k < 3.
Graph cycle_graph(std::size_t k);

// K_{2,3} with hubs 0 and 4 and path midpoints 1, 2, 3.
Graph theta_222();

// Lexicographic product G[H]: vertex (i, x) has id i*|V(H)| + x.
Graph compose(const Graph& outer, const Graph& inner);

// Names a level of the nested blow-up hierarchy G_0 = base, G_N = base[G_{N-1}].
class BlowupSpec {
 public:
  static BlowupSpec c4(unsigned level);
  static BlowupSpec theta222(unsigned level);
  static BlowupSpec custom(Graph base, unsigned level);
  static BlowupSpec of(BaseFamily family, unsigned level);

  BaseFamily family() const { return family_; }
  const Graph& base() const { return base_; }
  unsigned level() const { return level_; }

  std::uint64_t base_order() const { return base_.order(); }
  // n^N, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> blob_order() const;
  // n^{N+1}, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> total_order() const;

 private:
  BlowupSpec(BaseFamily family, Graph base, unsigned level);

  BaseFamily family_;
  Graph base_;
  unsigned level_;
};

// Throws CapExceeded when spec.total_order() exceeds vertex_cap.
Graph nested_blowup(const BlowupSpec& spec, std::uint64_t vertex_cap = kDefaultVertexCap);

// Index of the level-N blob containing v. Throws std::out_of_range.
std::uint64_t blob_of(std::uint64_t v, const BlowupSpec& spec);

}  // namespace blowup

#endif  // BLOWUP_BLOWUP_H_
