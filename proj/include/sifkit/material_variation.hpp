#pragma once

#include "sifkit/crack_geometry.hpp"

namespace sifkit {

// C2 radial cutoff: 1 on [0, rho/4], quintic ramp, 0 beyond rho.
struct Cutoff {
    double rho = 0.0;
    double rho_inner = 0.0;

    explicit Cutoff(double rho_) : rho(rho_), rho_inner(0.25 * rho_) {}
    double q(double r) const;
    double q_prime(double r) const;
    double q_double_prime(double r) const;
};

enum class VariationKind { Uni, Tan };

class MaterialVariation {
public:
    MaterialVariation(VariationKind kind, CrackPathPtr curve, Cutoff cutoff);

    VariationKind kind() const { return kind_; }
    const Cutoff& cutoff() const { return cutoff_; }
    Vec2 delta_gamma(const Vec2& x) const;
    Mat2 grad_delta_gamma(const Vec2& x) const;
    // Value at the exact crack point of chord distance r.
    Vec2 on_crack(double r) const;

private:
    VariationKind kind_;
    CrackPathPtr curve_;
    Cutoff cutoff_;
    Vec2 g10_;
};

}  // namespace sifkit
