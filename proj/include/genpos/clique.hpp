#pragma once

#include <cstdint>

#include "genpos/graph.hpp"

namespace genpos {

struct CliqueResult {
  int value = 0;
  VertexSet witness;
  std::int64_t nodes_explored = 0;
};

/// Exact maximum clique: branch and bound with a greedy-colouring bound.
CliqueResult clique_number(const Graph& g);

/// Maximum clique of the complement, witness in g's ids.
CliqueResult independence_number(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace genpos
