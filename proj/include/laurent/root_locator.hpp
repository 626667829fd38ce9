#ifndef LAURENT_ROOT_LOCATOR_HPP
#define LAURENT_ROOT_LOCATOR_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "laurent/core.hpp"

namespace laurent {

/// θ too close to π/4 for a root operation: all 2n roots collapse onto ±i.
class UnsupportedCaseError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Absolute tolerance on |z| and arg z used for arc classification.
inline constexpr double kArcTol = 1e-10;

enum class ArcClass { open_plus, open_minus, boundary, outside };

std::string_view to_string(ArcClass c);

/// The closed unit-circle arcs 2θ <= ±arg z <= π - 2θ and their interiors.
class ArcSet {
public:
    explicit ArcSet(double theta);

    double theta() const { return theta_; }
    double lower_arg() const { return 2.0 * theta_; }
    double upper_arg() const { return kPi - 2.0 * theta_; }

    /// Off the unit circle (beyond kArcTol) is `outside`; endpoints within
    /// kArcTol in arg are `boundary`.
    ArcClass classify(Complex z) const;

private:
    double theta_;
};

struct RootReport {
    std::vector<Complex> roots;     ///< sorted by arg in (-π, π]
    std::vector<double> residuals;  ///< |L_n(root)|
    double min_pairwise_gap = 0.0;
};

/// Ψ_θ(z) = (z + 1/z)/(2 cos 2θ).
Complex psi(Complex z, double theta);

/// Both solutions of Ψ_θ(z) = w; their product is 1. For real w the first root has Im >= 0.
std::pair<Complex, Complex> psi_preimage(Complex w, double theta);

ArcClass arc_membership(Complex z, double theta);

/// The 2n simple roots of L_n(·, F_θ), θ in [0, π/4), pulled back from Chebyshev roots.
RootReport roots_F_theta(int n, double theta);

/// Roots of L_n(·, G) for generic G: the F_θ roots of its normal form scaled by 1/ρ.
RootReport roots_general(int n, const Matrix2C& g);

}  // namespace laurent

#endif  // LAURENT_ROOT_LOCATOR_HPP
