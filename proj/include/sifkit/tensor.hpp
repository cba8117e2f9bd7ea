/**
 * @file tensor.hpp
 * Small 2D tensor types and pointwise elasticity / interaction integrands.
 *
 * Convention: beta(i,j) = du_i/dx_j. A Ten3 stores the gradient of a 2-tensor
 * as one Mat2 per derivative direction: T[k](i,j) = d beta_ij / dx_k.
 */
#pragma once

#include <Eigen/Dense>
#include <array>

namespace sifkit {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Ten3 = std::array<Mat2, 2>;

enum class PlaneState { PlaneStrain, PlaneStress };

struct Material {
    double lambda = 0.0;
    double mu = 0.0;
    PlaneState plane_state = PlaneState::PlaneStrain;

    static Material from_young(double E, double nu, PlaneState state);

    double lambda_hat() const;
    double kappa() const;
    double eta() const;
    double young() const;
    double poisson() const;
    void validate() const;
};

Mat2 stress(const Mat2& beta, const Material& m);

// sigma(beta_a) : beta_b
double interaction_energy(const Mat2& beta_a, const Mat2& beta_b, const Material& m);

// Interaction energy momentum tensor.
Mat2 interaction_momentum(const Mat2& beta_a, const Mat2& beta_b, const Material& m);

// Eshelby's energy momentum tensor.
Mat2 eshelby(const Mat2& beta, const Material& m);

Vec2 tau_bar(const Mat2& beta_a, const Mat2& beta_b, const Vec2& n, const Vec2& t_bar,
             const Material& m);

Vec2 lambda_bar(const Mat2& beta_a, const Mat2& sigma_a, const Ten3& grad_beta_b,
                const Ten3& grad_sigma_b, const Vec2& div_sigma_b, const Mat2& beta_b,
                const Vec2& b);

Ten3 stress_gradient(const Ten3& grad_beta, const Material& m);
Vec2 divergence(const Ten3& grad_sigma);

inline double contract(const Mat2& a, const Mat2& b) { return (a.array() * b.array()).sum(); }

}  // namespace sifkit
