#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "pathmatch/common.hpp"

namespace pathmatch {

// Undirected weighted graph held as a symmetric nonnegative adjacency
// matrix with zero diagonal. Immutable after construction.
class Graph {
 public:
  explicit Graph(Matrix weights) : weights_(std::move(weights)) {
    require(weights_.rows() == weights_.cols(), "Graph: adjacency matrix must be square");
    const Index n = weights_.rows();
    for (Index i = 0; i < n; ++i) {
      if (weights_(i, i) != 0.0)
        throw InvalidArgument("Graph: nonzero diagonal entry (self-loop)");
      for (Index j = 0; j < n; ++j) {
        const double w = weights_(i, j);
        if (!std::isfinite(w) || w < 0.0)
          throw InvalidArgument("Graph: weights must be finite and nonnegative");
        if (w != weights_(j, i))
          throw InvalidArgument("Graph: adjacency matrix must be symmetric");
      }
    }
  }

  static Graph empty(Index n) { return Graph(Matrix::Zero(n, n)); }

  // Builds from an undirected edge list; rejects self-loops and duplicates.
  static Graph from_edges(Index n, const std::vector<std::tuple<Index, Index, double>>& edges) {
    Matrix w = Matrix::Zero(n, n);
    for (const auto& [i, j, wij] : edges) {
      require(i >= 0 && i < n && j >= 0 && j < n, "Graph: vertex index out of range");
      require(i != j, "Graph: self-loops not allowed");
      require(w(i, j) == 0.0, "Graph: duplicate edge");
      require(std::isfinite(wij) && wij >= 0.0, "Graph: edge weight must be finite and nonnegative");
      w(i, j) = wij;
      w(j, i) = wij;
    }
    return Graph(std::move(w));
  }

  Index n() const { return weights_.rows(); }
  const Matrix& weights() const { return weights_; }

  // Diagonal of the degree matrix D, d(i) = sum_j w_ij.
  Vector degrees() const { return weights_.rowwise().sum(); }

  // Number of edges (vertex pairs with nonzero weight).
  Index edge_count() const {
    Index m = 0;
    for (Index i = 0; i < n(); ++i)
      for (Index j = i + 1; j < n(); ++j)
        if (weights_(i, j) != 0.0) ++m;
    return m;
  }

  double total_weight() const { return weights_.sum() / 2.0; }

 private:
  Matrix weights_;
};

// L = D - A. Symmetric with zero row sums; positive semidefinite for
// nonnegative weights.
inline Matrix laplacian(const Graph& g) {
  Matrix l = -g.weights();
  l.diagonal() = g.degrees();
  return l;
}

// Appends target_n - g.n() isolated vertices (zero rows and columns).
inline Graph pad_with_dummies(const Graph& g, Index target_n) {
  if (target_n < g.n())
    throw InvalidArgument("pad_with_dummies: target size smaller than graph");
  if (target_n == g.n()) return g;
  Matrix w = Matrix::Zero(target_n, target_n);
  w.topLeftCorner(g.n(), g.n()) = g.weights();
  return Graph(std::move(w));
}

}  // namespace pathmatch
