/**
 * @file asymptotic_fields.hpp
 * Williams mode I/II near-tip fields and the auxiliary gradients built from them.
 *
 * Williams quantities are returned in tip-frame components {g1(0), g2(0)};
 * auxiliary fields are returned in Cartesian components.
 */
#pragma once

#include "sifkit/crack_geometry.hpp"
#include "sifkit/tensor.hpp"

namespace sifkit {

enum class Mode { I, II };
enum class AuxFlavor { DFC, TF };

Mat2 williams_gradient(Mode mode, double r, double theta, const Material& m);
Mat2 williams_gradient_dtheta(Mode mode, double r, double theta, const Material& m);
Mat2 williams_stress(Mode mode, double r, double theta, const Material& m);
Vec2 williams_displacement(Mode mode, double r, double theta, const Material& m);

struct AuxDerivatives {
    Ten3 grad_beta;
    Ten3 grad_sigma;
    Vec2 div_sigma = Vec2::Zero();
};

class AuxiliaryField {
public:
    AuxiliaryField(AuxFlavor flavor, Mode mode, CrackPathPtr curve, Material m);

    AuxFlavor flavor() const { return flavor_; }
    Mode mode() const { return mode_; }
    const CrackPath& curve() const { return *curve_; }
    const Material& material() const { return mat_; }

    Mat2 gradient(const Vec2& x, Side hint = Side::None) const;
    Mat2 gradient_polar(double r, double theta) const;
    // Value on the exact crack face at chord distance r.
    Mat2 on_face(double r, Side side) const;
    AuxDerivatives derivatives(const Vec2& x, Side hint = Side::None) const;

private:
    void check_radius(double r) const;

    AuxFlavor flavor_;
    Mode mode_;
    CrackPathPtr curve_;
    Material mat_;
    Mat2 Q0_;
};

Mat2 dfc(Mode mode, CrackPathPtr curve, const Vec2& x, const Material& m);
Mat2 tf(Mode mode, CrackPathPtr curve, const Vec2& x, const Material& m);
AuxDerivatives aux_derivatives(AuxFlavor flavor, Mode mode, CrackPathPtr curve, const Vec2& x,
                               const Material& m);

}  // namespace sifkit
