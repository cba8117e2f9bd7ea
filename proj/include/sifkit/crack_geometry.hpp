/**
 * @file crack_geometry.hpp
 * Exact crack curves parameterized by chord distance from the tip, the moving
 * frame g1/g2, the angle zeta and the shifted polar angle branch.
 */
#pragma once

#include "sifkit/tensor.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace sifkit {

enum class Side { None, Upper, Lower };

struct Polar {
    double r = 0.0;
    double theta = 0.0;
};

struct Frame {
    Vec2 g1, g2, g1p, g2p;
};

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rotation by +90 degrees.
inline Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }
inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

class CrackPath {
public:
    virtual ~CrackPath() = default;

    // Native parameterization c(s), s in [0, native_end()], c(0) is the tip.
    virtual Vec2 native_point(double s) const = 0;
    virtual Vec2 native_d1(double s) const = 0;
    virtual Vec2 native_d2(double s) const = 0;
    virtual double native_end() const = 0;
    virtual double rho_max() const = 0;
    virtual std::string describe() const = 0;

    // Native parameter at chord distance r.
    virtual double param_at(double r) const;

    Vec2 tip() const { return native_point(0.0); }
    // Chord distance to the far end of the parameterized curve.
    double chord_end() const;

    Vec2 gamma(double r) const;
    Vec2 gamma_prime(double r) const;
    Vec2 gamma_second(double r) const;
    double zeta(double r) const;
    double zeta_prime(double r) const;
    Vec2 g1(double r) const;
    Vec2 g2(double r) const { return rot90(g1(r)); }
    Vec2 g1_prime(double r) const;
    Vec2 g2_prime(double r) const { return rot90(g1_prime(r)); }
    Frame frame(double r) const;

    // Polar coordinates about the tip, theta measured from g1(0) and shifted
    // into [-pi - zeta(r), pi - zeta(r)]. A side hint picks the branch for
    // points lying on (or numerically next to) a crack face.
    Polar extended_polar(const Vec2& x, Side hint = Side::None) const;
    double face_angle(double r, Side side) const;
    double phi(double r, double theta) const { return theta + zeta(r); }
    Vec2 project(const Vec2& x) const { return gamma((x - tip()).norm()); }
    // Outward normal of the body on the given face at chord distance r.
    Vec2 face_normal(double r, Side side) const;

protected:
    double ds_dr(double s, double r) const;
    void check_range(double r) const;
};

using CrackPathPtr = std::shared_ptr<const CrackPath>;

class StraightCrack final : public CrackPath {
public:
    // `into` points from the tip along the crack body.
    StraightCrack(Vec2 tip, Vec2 into, double length);
    Vec2 native_point(double s) const override { return tip_ + s * dir_; }
    Vec2 native_d1(double) const override { return dir_; }
    Vec2 native_d2(double) const override { return Vec2::Zero(); }
    double native_end() const override { return length_; }
    double rho_max() const override { return length_; }
    double param_at(double r) const override;
    std::string describe() const override;

private:
    Vec2 tip_, dir_;
    double length_;
};

class CircularArc final : public CrackPath {
public:
    // Points center + R (cos a, sin a) with a = tip_angle + orientation * s.
    CircularArc(Vec2 center, double R, double tip_angle, int orientation, double alpha);
    Vec2 native_point(double s) const override;
    Vec2 native_d1(double s) const override;
    Vec2 native_d2(double s) const override;
    double native_end() const override;
    double rho_max() const override;
    double param_at(double r) const override;
    std::string describe() const override;

private:
    Vec2 center_;
    double R_, tip_angle_, alpha_;
    int orient_;
};

// y = x^3 on [0, 1], tip at (1, 1), mouth at (0, 0).
class PowerCubic final : public CrackPath {
public:
    Vec2 native_point(double s) const override;
    Vec2 native_d1(double s) const override;
    Vec2 native_d2(double s) const override;
    double native_end() const override { return 1.0; }
    double rho_max() const override;
    std::string describe() const override { return "power_cubic"; }
};

// Parses the output of describe().
CrackPathPtr make_curve(const std::string& desc);

}  // namespace sifkit
