/**
 * @file bench_problems.hpp
 * Manufactured benchmark problems on the power and arc cracks, the arc
 * closed-form SIFs and convergence-rate estimation.
 */
#pragma once

#include "sifkit/fem_solver.hpp"
#include "sifkit/interaction.hpp"

#include <string>
#include <vector>

namespace sifkit {

// Plane strain, E = 1000, nu = 0.2.
Material benchmark_material();

// Extended Williams field with SIFs K plus the bounded field
// sigma_b = diag(x, y), loaded by b = -(1, 1).
class ManufacturedProblem {
public:
    ManufacturedProblem(std::string name, CrackPathPtr curve, std::string template_name, Material m);

    const std::string& name() const { return name_; }
    const std::string& template_name() const { return template_; }
    CrackPathPtr curve() const { return curve_; }
    const Material& material() const { return mat_; }
    Sif target() const { return {1.0, 1.0}; }

    Mat2 singular_gradient(const Vec2& x, Side hint = Side::None) const;
    Mat2 bounded_gradient(const Vec2& x) const;
    Mat2 exact_gradient(const Vec2& x, Side hint = Side::None) const;
    Mat2 exact_stress(const Vec2& x, Side hint = Side::None) const;
    Vec2 exact_displacement(const Vec2& x, Side hint = Side::None) const;
    // Exact gradient on the crack face at chord distance r.
    Mat2 face_gradient(double r, Side side, bool with_bounded = true) const;

    Vec2 body(const Vec2& x) const;
    Vec2 crack_traction(double r, Side side, bool with_bounded = true) const;

    // Loads seen by the interaction integral; without the bounded part they
    // belong to the singular field alone.
    Loads loads(bool with_bounded = true) const;

    // Exact displacements on the listed outer edges, exact tractions on the rest.
    ElasticityProblem fem_problem(std::shared_ptr<const CrackMesh> mesh, int order,
                                  const std::vector<EdgeMarker>& dirichlet = default_dirichlet()) const;

    // Bottom, right and top; the left edge holds the crack mouth.
    static std::vector<EdgeMarker> default_dirichlet();

private:
    Mat2 singular_polar(double r, double theta) const;

    std::string name_;
    CrackPathPtr curve_;
    std::string template_;
    Material mat_;
    Mat2 Q0_;
};

ManufacturedProblem power_problem(Material m = benchmark_material());
ManufacturedProblem arc_problem(Material m = benchmark_material());

// Circular-arc crack of radius R and half-angle alpha under remote tension sigma.
Sif exact_arc_sif(double R, double alpha, double sigma);

struct RateFit {
    double slope = 0.0;
    std::vector<double> per_level;
};

// Least-squares slope of log(error) against log(h) and the consecutive rates.
RateFit estimate_rate(const std::vector<double>& hs, const std::vector<double>& errors);

}  // namespace sifkit
