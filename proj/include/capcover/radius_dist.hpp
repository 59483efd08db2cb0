// Distribution of the circumcap radius theta_abc conditioned on the event E
// (tetrahedron well-centered, base acute): the conditional probability
// P{E | theta}, its integral kappa, and the density g / distribution G,
// with a Chebyshev cache for the expensive inner double integral.
#pragma once

#include <algorithm>
#include <vector>

#include "capcover/densities.hpp"
#include "capcover/quadrature.hpp"

namespace capcover {

/// P{E | theta} = (1/4pi) * E[(3 lambda - pi)] over acute inscribed triangles
/// of circumradius sin(theta), evaluated as a nested adaptive integral in the
/// (alpha, beta) angle chart over {alpha, beta < pi/2, alpha + beta > pi/2}.
/// The inner integral runs at one tenth of the outer tolerance.
inline double prob_E_given_theta(double theta, const QuadratureSpec& spec = {}) {
    if (!(theta >= kPi / 2 && theta <= kPi))
        throw std::domain_error("prob_E_given_theta: theta outside [pi/2, pi]");
    if (theta == kPi) return 0.0;
    const QuadratureSpec inner_spec = spec.tightened(0.1);
    auto outer = [&](double alpha) {
        auto inner = [&](double beta) {
            return (3.0 * lambda_angle_chart(alpha, beta, theta) - kPi) / (4.0 * kPi) *
                   sphere_angle_density(alpha, beta);
        };
        return integrate(inner, kPi / 2 - alpha, kPi / 2, inner_spec);
    };
    return integrate(outer, 0.0, kPi / 2, spec);
}

/// kappa = P{E} as the outer integral of (3/2) sin^3(theta) P{E | theta};
/// matches the closed form 11/96 - 1/(8 pi^2).
inline double kappa_quadrature(const QuadratureSpec& spec = {}) {
    const QuadratureSpec inner_spec = spec.tightened(0.1);
    auto f = [&](double theta) {
        const double s = std::sin(theta);
        return 1.5 * s * s * s * prob_E_given_theta(theta, inner_spec);
    };
    return integrate(f, kPi / 2, kPi, spec);
}

/// Cached distribution of theta_abc | E. P{E | theta} behaves like
/// 1/4 - (2/pi^2) eps ln(1/eps) + O(eps) near theta = pi/2 + eps, so a single
/// Chebyshev grid over [pi/2, pi] converges only algebraically. The cache
/// instead uses Chebyshev-Lobatto panels on dyadic subintervals refined
/// toward pi/2, interpolated barycentrically per panel; that restores the
/// 1e-8 interpolation budget. g and G are built on top with the closed-form
/// kappa, so their normalization error reflects only the P{E | .}
/// integration.
class ThetaAbcDist {
public:
    explicit ThetaAbcDist(QuadratureSpec spec = {}, int nodes_per_panel = 64,
                          int refinements = 12)
        : spec_(spec), nodes_(nodes_per_panel) {
        const QuadratureSpec node_spec = spec.tightened(0.1);
        edges_.push_back(kPi / 2);
        for (int j = refinements; j >= 0; --j)
            edges_.push_back(kPi / 2 + kPi / 2 * std::ldexp(1.0, -j));
        bary_.resize(static_cast<std::size_t>(nodes_));
        for (int k = 0; k < nodes_; ++k)
            bary_[static_cast<std::size_t>(k)] =
                (k % 2 == 0 ? 1.0 : -1.0) * (k == 0 || k == nodes_ - 1 ? 0.5 : 1.0);
        for (std::size_t p = 0; p + 1 < edges_.size(); ++p) {
            const double lo = edges_[p], hi = edges_[p + 1];
            for (int k = 0; k < nodes_; ++k) {
                const double x = std::cos(kPi * k / (nodes_ - 1));
                const double theta = lo + (hi - lo) / 2 * (x + 1.0);
                theta_.push_back(theta);
                values_.push_back(prob_E_given_theta(theta, node_spec));
            }
        }
    }

    /// Interpolated P{E | theta}.
    double prob_e(double theta) const {
        if (!(theta >= kPi / 2 && theta <= kPi))
            throw std::domain_error("ThetaAbcDist: theta outside [pi/2, pi]");
        std::size_t p = static_cast<std::size_t>(
            std::upper_bound(edges_.begin(), edges_.end(), theta) - edges_.begin());
        p = std::clamp<std::size_t>(p, 1, edges_.size() - 1) - 1;
        const std::size_t base = p * static_cast<std::size_t>(nodes_);
        double num = 0.0, den = 0.0;
        for (int k = 0; k < nodes_; ++k) {
            const double d = theta - theta_[base + static_cast<std::size_t>(k)];
            if (std::abs(d) < 1e-15) return values_[base + static_cast<std::size_t>(k)];
            const double w = bary_[static_cast<std::size_t>(k)] / d;
            num += w * values_[base + static_cast<std::size_t>(k)];
            den += w;
        }
        return num / den;
    }

    /// Conditional density g(theta) = (3/(2 kappa)) sin^3(theta) P{E | theta}.
    double g(double theta) const {
        const double s = std::sin(theta);
        return 1.5 / constants::kappa_closed * s * s * s * prob_e(theta);
    }

    /// G(theta) = integral of g from pi/2; nondecreasing, G(pi) = 1.
    double G(double theta) const {
        if (!(theta >= kPi / 2 && theta <= kPi))
            throw std::domain_error("ThetaAbcDist: theta outside [pi/2, pi]");
        return integrate([this](double t) { return g(t); }, kPi / 2, theta, spec_);
    }

    double mean() const {
        return integrate([this](double t) { return t * g(t); }, kPi / 2, kPi, spec_);
    }

    double variance() const {
        const double m = mean();
        return integrate([this, m](double t) { return (t - m) * (t - m) * g(t); }, kPi / 2,
                         kPi, spec_);
    }

    const QuadratureSpec& spec() const { return spec_; }

    /// Process-wide instance with default tolerances; initialized once,
    /// safe to read from any number of threads.
    static const ThetaAbcDist& shared() {
        static const ThetaAbcDist instance;
        return instance;
    }

private:
    QuadratureSpec spec_;
    int nodes_;
    std::vector<double> edges_, theta_, values_, bary_;
};

}  // namespace capcover
