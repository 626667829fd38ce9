#ifndef LAURENT_NORMAL_FORM_HPP
#define LAURENT_NORMAL_FORM_HPP

#include "laurent/core.hpp"

namespace laurent {

/// Column norms below this are treated as zero.
inline constexpr double kGenericityFloor = 1e-300;

struct ColumnNorms {
    double first;
    double second;
};

/// G = H · diag(first, second) with unit-norm columns in H.
struct NormalizedMatrix {
    Matrix2C h;
    double scale;     ///< R = R1·R2
    double dilation;  ///< ρ = R1/R2
};

struct ThetaPhase {
    double theta;   ///< in [0, π/4]
    Complex phase;  ///< |a| = 1
};

/// Canonical parameters (R, ρ, θ) with L_n(z, G) = R^n · L_n(ρz, F_θ) for every n.
///
/// `phase` is the unit phase of the square root's off-diagonal entry; it never
/// affects L_n and is reported for completeness.
struct NormalForm {
    double scale;
    double dilation;
    double theta;
    Complex phase;
};

/// Both columns nonzero.
bool is_generic(const Matrix2C& g);

ColumnNorms column_norms(const Matrix2C& g);

NormalizedMatrix normalize(const Matrix2C& g);

/// (1,2) entry of H*H for column-normalized H.
Complex gram_offdiag(const Matrix2C& h);

/// Nonnegative square root of a Hermitian PSD 2×2 matrix (closed form).
Matrix2C psd_sqrt(const Matrix2C& m);

/// θ = ½·arcsin|γ|, a = γ/|γ| (a = 1 when γ = 0).
ThetaPhase theta_from_gamma(Complex gamma);

/// Same parameters, with cos 2θ supplied independently as |det H|. Using both
/// sin 2θ = |γ| and cos 2θ = |det H| keeps θ accurate near π/4, where arcsin
/// alone loses half the significant digits.
ThetaPhase theta_from_gamma(Complex gamma, double abs_det);

NormalForm normal_form(const Matrix2C& g);

}  // namespace laurent

#endif  // LAURENT_NORMAL_FORM_HPP
