#pragma once

#include <vector>

#include "cosserat/geometry.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  static GaussRule legendre(int n);
};

/// Tensor-product rule on omega x [-1/2, 1/2]; weights are positive and
/// sum to the slab volume.
struct QuadratureGrid {
  struct Node {
    Vec3 point;  // (x1, x2, eta3)
    double weight;
  };
  std::vector<Node> nodes;

  static QuadratureGrid box(const Rect& omega, int n_plane, int n_thickness);

  double volume() const {
    double v = 0.0;
    for (const auto& n : nodes) v += n.weight;
    return v;
  }
};

/// Tensor-product rule on omega.
struct QuadratureGrid2D {
  struct Node {
    Vec2 point;
    double weight;
  };
  std::vector<Node> nodes;

  static QuadratureGrid2D rect(const Rect& omega, int n_plane);
};

}  // namespace cosserat
