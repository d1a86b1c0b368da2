#include "blowup/blowup.h"

#include <bit>
#include <utility>

namespace blowup {
namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

}  // namespace

std::string_view family_name(BaseFamily family) {
  switch (family) {
    case BaseFamily::kC4:
      return "c4";
    case BaseFamily::kTheta222:
      return "theta222";
    case BaseFamily::kCustom:
      return "custom";
  }
  return "unknown";
}

std::optional<BaseFamily> parse_family(std::string_view name) {
  if (name == "c4") return BaseFamily::kC4;
  if (name == "theta222") return BaseFamily::kTheta222;
  if (name == "custom") return BaseFamily::kCustom;
  return std::nullopt;
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle_graph needs k >= 3, got " + std::to_string(k));
  GraphBuilder b(k);
  for (Vertex v = 0; v < k; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % k));
  return std::move(b).build();
}

Graph theta_222() {
  GraphBuilder b(5);
  for (Vertex mid : {1u, 2u, 3u}) {
    b.add_edge(0, mid);
    b.add_edge(mid, 4);
  }
  return std::move(b).build();
}

Graph compose(const Graph& outer, const Graph& inner) {
  const std::size_t n = outer.order();
  const std::size_t k = inner.order();
  if (n == 0 || k == 0) throw std::invalid_argument("compose requires non-empty graphs");

  GraphBuilder b(n * k);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex x = 0; x < k; ++x) {
      const auto id = static_cast<Vertex>(i * k + x);
      for (Vertex j = 0; j < n; ++j) {
        if (outer.adjacent(i, j)) b.fill_row_range(id, j * k, (j + 1) * k);
      }
      auto r = inner.row(x);
      for (std::size_t w = 0; w < r.size(); ++w) {
        for (Word bits = r[w]; bits != 0; bits &= bits - 1) {
          const auto y = static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
          b.set_bit(id, static_cast<Vertex>(i * k + y));
        }
      }
    }
  }
  return std::move(b).build();
}

BlowupSpec::BlowupSpec(BaseFamily family, Graph base, unsigned level)
    : family_(family), base_(std::move(base)), level_(level) {
  if (base_.order() == 0) throw std::invalid_argument("blow-up base graph is empty");
}

BlowupSpec BlowupSpec::c4(unsigned level) { return {BaseFamily::kC4, cycle_graph(4), level}; }

BlowupSpec BlowupSpec::theta222(unsigned level) {
  return {BaseFamily::kTheta222, theta_222(), level};
}

BlowupSpec BlowupSpec::custom(Graph base, unsigned level) {
  return {BaseFamily::kCustom, std::move(base), level};
}

BlowupSpec BlowupSpec::of(BaseFamily family, unsigned level) {
  switch (family) {
    case BaseFamily::kC4:
      return c4(level);
    case BaseFamily::kTheta222:
      return theta222(level);
    case BaseFamily::kCustom:
      break;
  }
  throw std::invalid_argument("custom family needs an explicit base graph");
}

std::optional<std::uint64_t> BlowupSpec::blob_order() const {
  return checked_pow(base_order(), level_);
}

std::optional<std::uint64_t> BlowupSpec::total_order() const {
  return checked_pow(base_order(), level_ + 1);
}

Graph nested_blowup(const BlowupSpec& spec, std::uint64_t vertex_cap) {
  const auto total = spec.total_order();
  if (!total || *total > vertex_cap) {
    throw CapExceeded("level " + std::to_string(spec.level()) + " blow-up of " +
                      std::string(family_name(spec.family())) + " exceeds the vertex cap of " +
                      std::to_string(vertex_cap));
  }
  Graph g = spec.base();
  for (unsigned i = 0; i < spec.level(); ++i) g = compose(spec.base(), g);
  return g;
}

std::uint64_t blob_of(std::uint64_t v, const BlowupSpec& spec) {
  const auto total = spec.total_order();
  if (!total || v >= *total) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside the level-" +
                            std::to_string(spec.level()) + " graph");
  }
  return v / *spec.blob_order();
}

}  // namespace blowup
