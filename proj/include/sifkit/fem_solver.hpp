/**
 * @file fem_solver.hpp
 * Continuous P1/P2 Galerkin solver for plane elasticity on a crack mesh,
 * plus gradient error norms.
 */
#pragma once

#include "sifkit/mesh.hpp"
#include "sifkit/tensor.hpp"

#include <Eigen/Sparse>
#include <functional>
#include <map>
#include <memory>

namespace sifkit {

// Anything that yields a displacement gradient inside a given element.
class GradientField {
public:
    virtual ~GradientField() = default;
    virtual Mat2 gradient(int elem, const Vec2& x) const = 0;
};

// Wraps a closed-form gradient; elements next to the crack pass their side
// so points between the polyline and the exact curve take the right branch.
class ExactGradient final : public GradientField {
public:
    using Fn = std::function<Mat2(const Vec2&, Side)>;
    ExactGradient(Fn fn, std::vector<Side> element_sides) : fn_(std::move(fn)), sides_(std::move(element_sides)) {}
    Mat2 gradient(int elem, const Vec2& x) const override {
        return fn_(x, elem >= 0 && elem < int(sides_.size()) ? sides_[elem] : Side::None);
    }

private:
    Fn fn_;
    std::vector<Side> sides_;
};

// Pointwise sum of two gradient fields.
class SumGradient final : public GradientField {
public:
    SumGradient(const GradientField& a, const GradientField& b) : a_(a), b_(b) {}
    Mat2 gradient(int elem, const Vec2& x) const override { return a_.gradient(elem, x) + b_.gradient(elem, x); }

private:
    const GradientField& a_;
    const GradientField& b_;
};

class ZeroGradient final : public GradientField {
public:
    Mat2 gradient(int, const Vec2&) const override { return Mat2::Zero(); }
};

class FeSpace {
public:
    FeSpace(std::shared_ptr<const CrackMesh> mesh, int order);

    const CrackMesh& mesh() const { return *mesh_; }
    std::shared_ptr<const CrackMesh> mesh_ptr() const { return mesh_; }
    int order() const { return order_; }
    int nodes_per_element() const { return order_ == 1 ? 3 : 6; }
    int num_nodes() const { return int(nodes_.size()); }
    int num_dofs() const { return 2 * num_nodes(); }
    const std::vector<Vec2>& nodes() const { return nodes_; }
    const std::array<int, 6>& element(int e) const { return elems_[e]; }
    int num_elements() const { return int(elems_.size()); }
    // Global nodes along a marked edge (2 for P1, 3 for P2 with the midpoint last).
    std::vector<int> edge_nodes(int marked_edge) const;

    Vec2 to_physical(int e, const Vec2& xi) const;
    Vec2 to_reference(int e, const Vec2& x) const;
    double jacobian(int e) const;
    // Shape values and physical gradients at reference point xi.
    void shape(int e, const Vec2& xi, double* N, Vec2* dN) const;

private:
    std::shared_ptr<const CrackMesh> mesh_;
    int order_;
    std::vector<Vec2> nodes_;
    std::vector<std::array<int, 6>> elems_;
    std::vector<std::pair<int, int>> owners_;
    std::vector<Mat2> J_, Jinv_;
};

enum class BcType { Dirichlet, Traction, Symmetry };

struct ElasticityProblem {
    std::shared_ptr<const CrackMesh> mesh;
    Material material;
    int order = 1;
    std::map<EdgeMarker, BcType> bc;  // crack faces are always traction
    std::function<Vec2(const Vec2&)> body;                                  // b(x); empty means zero
    std::function<Vec2(const Vec2&)> dirichlet;                             // u-bar(x)
    std::function<Vec2(const Vec2&, const Vec2&, EdgeMarker)> traction;     // (x, outward n, marker)
    std::function<Vec2(double, Side)> crack_traction;                       // at Gamma(r), empty means free
    int load_degree = 6;
    int edge_points = 4;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class DiscreteSolution final : public GradientField {
public:
    DiscreteSolution(std::shared_ptr<const FeSpace> space, Eigen::VectorXd u)
        : space_(std::move(space)), u_(std::move(u)) {}

    const FeSpace& space() const { return *space_; }
    const Eigen::VectorXd& values() const { return u_; }
    Vec2 nodal(int node) const { return Vec2(u_(2 * node), u_(2 * node + 1)); }
    Mat2 gradient_ref(int elem, const Vec2& xi) const;
    Mat2 gradient(int elem, const Vec2& x) const override;
    Vec2 displacement(int elem, const Vec2& x) const;
    double residual = 0.0;

private:
    std::shared_ptr<const FeSpace> space_;
    Eigen::VectorXd u_;
};

struct LinearSystem {
    Eigen::SparseMatrix<double> K;
    Eigen::VectorXd f;
};

LinearSystem assemble(const FeSpace& space, const ElasticityProblem& problem);
DiscreteSolution assemble_and_solve(const ElasticityProblem& problem);

double strain_energy(const DiscreteSolution& sol, const Material& m);

double error_interior(const DiscreteSolution& sol, const GradientField& exact, int degree = 6);
double error_crackface(const DiscreteSolution& sol, const std::function<Mat2(double, Side)>& exact_on_face,
                       int npoints = 6);

}  // namespace sifkit
