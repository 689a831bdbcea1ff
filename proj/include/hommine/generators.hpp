#pragma once

#include <cstdint>
#include <string_view>

#include "hommine/graph.hpp"

namespace hommine {

/// Bibliographic network: authors, papers, keywords and institutes.
/// Authors and papers are linked in both directions.
Graph generate_biblio(std::size_t authors, std::uint64_t seed);

/// Random DAG; edges only go from lower to higher node ids.
Graph generate_dag(std::size_t nodes, std::size_t labels, double density, std::uint64_t seed);

/// A single directed cycle with random labels (one label gives a uniform cycle).
Graph generate_cycle(std::size_t nodes, std::size_t labels, std::uint64_t seed);

/// Preferential attachment: each new node links to two earlier nodes
/// chosen with probability proportional to degree; edge direction random.
Graph generate_scalefree(std::size_t nodes, std::size_t labels, std::uint64_t seed);

/// Uniform random digraph without self loops, each ordered pair an edge
/// with probability `density`.
Graph generate_random(std::size_t nodes, std::size_t labels, double density, std::uint64_t seed);

}  // namespace hommine
