/**
 * @file interaction.hpp
 * Discrete interaction integral over the elements near the tip and SIF extraction.
 */
#pragma once

#include "sifkit/asymptotic_fields.hpp"
#include "sifkit/fem_solver.hpp"
#include "sifkit/material_variation.hpp"
#include "sifkit/mesh.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sifkit {

enum class Variant { UniDfc, TanDfc, TanTf };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);
AuxFlavor flavor_of(Variant v);
VariationKind variation_of(Variant v);

struct PlanOptions {
    int triangle_degree = 4;
    int edge_points = 4;
    int singular_points = 12;
    // > 0: elements touching the tip use a collapsed product rule with this many
    // points per direction instead of the regular rule.
    int tip_points = 0;
    // Skip the gradient term over elements inside r < rho/4 for UniDfc.
    bool skip_plateau = true;
};

struct IntegrationPlan {
    double rho = 0.0;
    std::vector<int> kset;
    std::vector<int> crack_edges;
    // Radii splitting [0, rho] for the mapped crack-face rule.
    std::vector<double> breakpoints;
    PlanOptions options;
};

IntegrationPlan make_plan(const CrackMesh& mesh, double rho, PlanOptions options = {});

struct Loads {
    std::function<Vec2(const Vec2&)> body;          // empty means zero
    std::function<Vec2(double, Side)> crack_traction;  // at Gamma(r); empty means free
};

// The map s(r) = (r^2/rho - r) q(r) + r and its derivative.
double s_map(const Cutoff& c, double rt);
double s_map_prime(const Cutoff& c, double rt);

// Integral over [0, rho] of f(r) dr using Gauss rules on the breakpoint intervals
// composed with the map s.
double singular_edge_quadrature(const Cutoff& cutoff, const std::vector<double>& breakpoints, int npoints,
                                const std::function<double(double)>& f);

double discrete_interaction(const GradientField& beta_h, const CrackMesh& mesh, const AuxiliaryField& aux,
                            const MaterialVariation& mv, const IntegrationPlan& plan, const Loads& loads);

double discrete_interaction(const GradientField& beta_h, const CrackMesh& mesh, const Material& m, Variant v,
                            Mode mode, const IntegrationPlan& plan, const Loads& loads);

struct Sif {
    double KI = 0.0;
    double KII = 0.0;
};

Sif compute_sif(const GradientField& beta_h, const CrackMesh& mesh, const Material& m, Variant v,
                const IntegrationPlan& plan, const Loads& loads);

struct SweepEntry {
    double rho;
    Sif K;
};

std::vector<SweepEntry> rho_sweep(const GradientField& beta_h, const CrackMesh& mesh, const Material& m, Variant v,
                                  const std::vector<double>& rhos, const Loads& loads, PlanOptions options = {});

double default_rho(const CrackPath& curve);

}  // namespace sifkit
