#ifndef LAURENT_CHEBYSHEV_HPP
#define LAURENT_CHEBYSHEV_HPP

#include <vector>

#include "laurent/core.hpp"

namespace laurent {

/// Degree of a first-kind Chebyshev polynomial, n >= 1.
class ChebDegree {
public:
    explicit ChebDegree(int n);
    int value() const { return n_; }

private:
    int n_;
};

struct PreimagePoint {
    double root;
    int multiplicity;
};

/// T_n(ζ). Uses cos(n·arccos ζ) on the real segment [-1, 1], the three-term
/// recurrence elsewhere.
Complex cheb_eval(ChebDegree n, Complex zeta);
double cheb_eval(ChebDegree n, double x);

/// cos((2j-1)π/(2n)), j = 1..n, ascending.
std::vector<double> cheb_roots(ChebDegree n);

/// Solutions of T_n(x) = s for s in [-1, 1], ascending, with multiplicity.
std::vector<PreimagePoint> cheb_preimage(ChebDegree n, double s);

namespace detail {

/// T_n(ζ) = ½(μ1^n + μ2^n), μ1,2 = ζ ± sqrt(ζ² - 1) (principal root).
Complex cheb_eval_mu(ChebDegree n, Complex zeta);

/// Plain three-term recurrence, no representation switch.
Complex cheb_eval_recurrence(ChebDegree n, Complex zeta);

}  // namespace detail

}  // namespace laurent

#endif  // LAURENT_CHEBYSHEV_HPP
