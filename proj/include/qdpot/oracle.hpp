#ifndef QDPOT_ORACLE_HPP
#define QDPOT_ORACLE_HPP

#include <functional>
#include <vector>

#include "qdpot/domain.hpp"

namespace qdpot {
namespace oracle {

/// Uniformly sampled complex boundary values; N must be a power of two >= 64.
struct BoundarySamples {
    std::vector<double> thetas;
    std::vector<cplx> values;

    static BoundarySamples from_fn(int n, const std::function<cplx(double)>& fn);
    int size() const { return static_cast<int>(values.size()); }
};

/// Trapezoid-rule Poisson integral of the samples at |v| < 1; spectrally
/// accurate for data analytic in a neighbourhood of the circle.
cplx poisson_disc(const BoundarySamples& samples, cplx v);

/// DFT, zero the negative modes, inverse DFT.
BoundarySamples hardy_project(const BoundarySamples& samples);

/// One-sided 3-point inward finite difference of u along the outward normal
/// at f(e^{i theta}); O(step^2). The evaluator works in domain coordinates.
cplx fd_normal(const QuadDomain& dom, const std::function<cplx(cplx)>& u, double theta,
               double step);

/// Green's-theorem boundary quadrature of the area integral of a polynomial:
/// (1/2i) times the contour integral of h(f(w)) conj(f(w)) f'(w) dw, with a
/// high-order trapezoid rule (conjugation taken numerically, independent of
/// the Schwarz-function machinery).
cplx area_integral(const QuadDomain& dom, const Poly& h, int samples = 1024);

/// Genuine 2-D quadrature over the domain through the polar pullback:
/// Gauss-Legendre in radius, trapezoid in angle.
cplx area_quadrature_2d(const QuadDomain& dom, const std::function<cplx(cplx)>& F,
                        int nr = 64, int ntheta = 256);

/// In-place radix-2 FFT (size a power of two).
void fft_inplace(std::vector<cplx>& a, bool inverse);

struct RationalFit {
    RationalFn fit;
    double residual = 0.0;  // max |fit(w_i) - y_i| over the samples
};

/// Least-squares rational interpolation of circle samples with prescribed
/// numerator/denominator degrees (linearized: P(w) - y Q(w) ~ 0, Q(0) = 1).
RationalFit fit_rational_on_circle(const std::vector<double>& thetas,
                                   const std::vector<cplx>& values, int deg_num,
                                   int deg_den);

/// Adaptive Gauss-Legendre panel integration of f along the segment [a, b];
/// cross-check for the closed-form antiderivative.
cplx gl_segment_integral(const RationalFn& f, cplx a, cplx b, int panels = 32);

}  // namespace oracle
}  // namespace qdpot

#endif
