#include "cosserat/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cosserat {

GaussRule GaussRule::legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss rule needs at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

QuadratureGrid QuadratureGrid::box(const Rect& omega, int n_plane, int n_thickness) {
  const GaussRule plane = GaussRule::legendre(n_plane);
  const GaussRule thick = GaussRule::legendre(n_thickness);
  const double sx = 0.5 * (omega.hi[0] - omega.lo[0]);
  const double sy = 0.5 * (omega.hi[1] - omega.lo[1]);
  const double cx = 0.5 * (omega.hi[0] + omega.lo[0]);
  const double cy = 0.5 * (omega.hi[1] + omega.lo[1]);
  QuadratureGrid grid;
  grid.nodes.reserve(static_cast<std::size_t>(n_plane * n_plane * n_thickness));
  for (int i = 0; i < n_plane; ++i) {
    for (int j = 0; j < n_plane; ++j) {
      for (int k = 0; k < n_thickness; ++k) {
        QuadratureGrid::Node node;
        node.point = Vec3(cx + sx * plane.nodes[static_cast<std::size_t>(i)],
                          cy + sy * plane.nodes[static_cast<std::size_t>(j)],
                          0.5 * thick.nodes[static_cast<std::size_t>(k)]);
        node.weight = sx * sy * 0.5 * plane.weights[static_cast<std::size_t>(i)] *
                      plane.weights[static_cast<std::size_t>(j)] *
                      thick.weights[static_cast<std::size_t>(k)];
        grid.nodes.push_back(node);
      }
    }
  }
  return grid;
}

QuadratureGrid2D QuadratureGrid2D::rect(const Rect& omega, int n_plane) {
  const GaussRule plane = GaussRule::legendre(n_plane);
  const double sx = 0.5 * (omega.hi[0] - omega.lo[0]);
  const double sy = 0.5 * (omega.hi[1] - omega.lo[1]);
  const double cx = 0.5 * (omega.hi[0] + omega.lo[0]);
  const double cy = 0.5 * (omega.hi[1] + omega.lo[1]);
  QuadratureGrid2D grid;
  grid.nodes.reserve(static_cast<std::size_t>(n_plane * n_plane));
  for (int i = 0; i < n_plane; ++i) {
    for (int j = 0; j < n_plane; ++j) {
      QuadratureGrid2D::Node node;
      node.point = Vec2(cx + sx * plane.nodes[static_cast<std::size_t>(i)],
                        cy + sy * plane.nodes[static_cast<std::size_t>(j)]);
      node.weight = sx * sy * plane.weights[static_cast<std::size_t>(i)] *
                    plane.weights[static_cast<std::size_t>(j)];
      grid.nodes.push_back(node);
    }
  }
  return grid;
}

}  // namespace cosserat
