/**
 * @file study.hpp
 * Refinement studies driven by a plain-text config, with CSV/SVG output and
 * threshold checks.
 *
 * Config format: `[section]` headers and `key = value` lines, '#' comments.
 *
 *   [problem]      name = power_crack | arc_crack_manufactured
 *                  dirichlet = bottom, right, top
 *                  template = <mesh file>            (optional)
 *   [fem]          order = 1 | 2, levels = 4
 *                  initial_refinements = 0     (applied to the template before level 1)
 *   [interaction]  variants = uni_dfc, tan_dfc, tan_tf
 *                  rho = auto | <length>
 *                  rho_sweep = 0.7, 0.775, 0.85, 0.925, 1.0
 *                  triangle_degree, edge_points, singular_points, tip_points
 *   [material]     E = 1000, nu = 0.2, plane = strain | stress
 *   [output]       dir = out, svg = true, solution = true
 */
#pragma once

#include "sifkit/bench_problems.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sifkit {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string problem = "power_crack";
    std::vector<EdgeMarker> dirichlet = ManufacturedProblem::default_dirichlet();
    std::string template_file;
    int order = 1;
    int levels = 4;
    int initial_refinements = 0;
    std::vector<Variant> variants = {Variant::UniDfc, Variant::TanDfc, Variant::TanTf};
    double rho = 0.0;  // 0 means auto
    std::vector<double> rho_sweep = {0.7, 0.775, 0.85, 0.925, 1.0};
    PlanOptions plan;
    double young = 1000.0;
    double poisson = 0.2;
    PlaneState plane = PlaneState::PlaneStrain;
    std::string output_dir = "out";
    bool svg = true;
    bool solution_csv = true;

    Material material() const { return Material::from_young(young, poisson, plane); }
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);
void validate(const RunConfig& c);

ManufacturedProblem make_problem(const RunConfig& c);

struct LevelResult {
    int level = 0;
    double h = 0.0;
    int triangles = 0;
    int dofs = 0;
    double err_interior = 0.0;
    double err_crackface = 0.0;
    std::map<Variant, Sif> K;
};

struct SweepRow {
    double rho;
    Variant variant;
    Sif K;
};

struct SifReport {
    RunConfig config;
    Sif exact;
    double rho = 0.0;
    std::vector<LevelResult> levels;
    std::vector<SweepRow> sweep;
    // Nodal solution per level: x, y, ux, uy.
    std::vector<std::vector<std::array<double, 4>>> solutions;

    std::vector<double> hs() const;
    std::vector<double> sif_errors(Variant v, Mode m) const;
};

SifReport run_study(const RunConfig& c, std::ostream* log = nullptr);

struct CheckItem {
    std::string name;
    bool pass;
    std::string detail;
};

// Rates, final SIF error, rho spread and variant agreement thresholds.
std::vector<CheckItem> check_report(const SifReport& r);

std::string format_number(double v);
void write_convergence_csv(const SifReport& r, std::ostream& out);
void write_sweep_csv(const SifReport& r, std::ostream& out);
void write_report(const SifReport& r, const std::vector<CheckItem>& checks, std::ostream& out);
void write_svg(const SifReport& r, std::ostream& out);
// Writes every output file into r.config.output_dir.
void emit_outputs(const SifReport& r, const std::vector<CheckItem>& checks);

}  // namespace sifkit
