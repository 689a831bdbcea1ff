#include "hommine/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

namespace hommine {

namespace {

// Modulo arithmetic on the raw engine keeps outputs identical across
// standard libraries; std distributions are implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  bool chance(double p) { return static_cast<double>(engine_() % 1000000) < p * 1000000.0; }

 private:
  std::mt19937_64 engine_;
};

std::string label_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "L" + std::to_string(i);
}

}  // namespace

Graph generate_biblio(std::size_t authors, std::uint64_t seed) {
  static constexpr std::array<const char*, 6> kTopics{"DM", "DB", "ML", "IR", "AI", "PL"};
  Rng rng(seed);
  GraphBuilder b;
  const std::size_t institutes = authors / 5 + 1;
  const std::size_t papers = authors * 2;
  std::vector<NodeId> inst, auth, pap, topic;
  for (std::size_t i = 0; i < institutes; ++i) inst.push_back(b.add_node("institute"));
  for (std::size_t i = 0; i < authors; ++i) {
    auth.push_back(b.add_node("author"));
    b.add_edge(auth.back(), inst[rng.below(institutes)]);
  }
  for (const char* t : kTopics) topic.push_back(b.add_node(t));
  for (std::size_t i = 0; i < papers && authors > 0; ++i) {
    const NodeId p = b.add_node("paper");
    pap.push_back(p);
    const std::size_t n_auth = 1 + rng.below(3);
    std::vector<NodeId> chosen;
    for (std::size_t k = 0; k < n_auth; ++k) {
      const NodeId a = auth[rng.below(authors)];
      if (std::find(chosen.begin(), chosen.end(), a) != chosen.end()) continue;
      chosen.push_back(a);
      b.add_edge(a, p);
      b.add_edge(p, a);
    }
    const std::size_t n_kw = 1 + rng.below(2);
    for (std::size_t k = 0; k < n_kw; ++k) b.add_edge(p, topic[rng.below(topic.size())]);
  }
  return b.build();
}

Graph generate_dag(std::size_t nodes, std::size_t labels, double density, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b;
  for (std::size_t i = 0; i < nodes; ++i) b.add_node(label_name(rng.below(std::max<std::size_t>(labels, 1))));
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = i + 1; j < nodes; ++j)
      if (rng.chance(density)) b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return b.build();
}

Graph generate_cycle(std::size_t nodes, std::size_t labels, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b;
  for (std::size_t i = 0; i < nodes; ++i) b.add_node(label_name(rng.below(std::max<std::size_t>(labels, 1))));
  for (std::size_t i = 0; i < nodes; ++i) b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % nodes));
  return b.build();
}

Graph generate_scalefree(std::size_t nodes, std::size_t labels, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b;
  std::vector<NodeId> endpoints;  // each node once per incident edge
  for (std::size_t i = 0; i < nodes; ++i) {
    const NodeId v = b.add_node(label_name(rng.below(std::max<std::size_t>(labels, 1))));
    if (i == 0) {
      endpoints.push_back(v);
      continue;
    }
    for (int k = 0; k < 2; ++k) {
      const NodeId u = endpoints[rng.below(endpoints.size())];
      if (u == v) continue;
      if (rng.below(2) == 0)
        b.add_edge(v, u);
      else
        b.add_edge(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return b.build();
}

Graph generate_random(std::size_t nodes, std::size_t labels, double density, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b;
  for (std::size_t i = 0; i < nodes; ++i) b.add_node(label_name(rng.below(std::max<std::size_t>(labels, 1))));
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t j = 0; j < nodes; ++j)
      if (i != j && rng.chance(density)) b.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return b.build();
}

}  // namespace hommine
