#pragma once

#include "gidyn/graph.hpp"
#include "gidyn/linalg.hpp"

namespace gidyn {

SymmetricMatrix adjacency_matrix(const Graph& g);

/// L = D - A.
SymmetricMatrix laplacian(const Graph& g);

}  // namespace gidyn
