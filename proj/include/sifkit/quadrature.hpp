/**
 * @file quadrature.hpp
 * Reference-element quadrature. Triangle rules live on the triangle with
 * vertices (0,0), (1,0), (0,1) (weights sum to 1/2); line rules on [0,1].
 */
#pragma once

#include "sifkit/tensor.hpp"

#include <vector>

namespace sifkit {

struct QuadratureRule {
    std::vector<Vec2> points;
    std::vector<double> weights;
    std::size_t size() const { return weights.size(); }
};

struct LineRule {
    std::vector<double> points;
    std::vector<double> weights;
    std::size_t size() const { return weights.size(); }
};

// Symmetric rules for degree 1..6; higher degrees use a collapsed Gauss product.
QuadratureRule triangle_rule(int degree);

// Gauss product rule collapsed onto vertex (0,0); its Jacobian vanishes
// linearly there, which absorbs 1/r singularities at that vertex.
QuadratureRule collapsed_rule(int n);

// Gauss-Legendre with n points.
LineRule edge_rule(int n);

struct PhysicalPoint {
    Vec2 x;
    double w;
};

// Maps a reference rule onto triangle (a, b, c); a is the image of (0,0).
std::vector<PhysicalPoint> map_rule(const Vec2& a, const Vec2& b, const Vec2& c, const QuadratureRule& rule);

}  // namespace sifkit
