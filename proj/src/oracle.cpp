#include "qdpot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdpot {
namespace oracle {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
cplx unit(double theta) { return cplx(std::cos(theta), std::sin(theta)); }

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

BoundarySamples BoundarySamples::from_fn(int n, const std::function<cplx(double)>& fn) {
    if (!is_pow2(n) || n < 64)
        throw error(errc::internal, "sample count must be a power of two >= 64");
    BoundarySamples s;
    s.thetas.resize(n);
    s.values.resize(n);
    for (int k = 0; k < n; ++k) {
        s.thetas[k] = two_pi * k / n;
        s.values[k] = fn(s.thetas[k]);
    }
    return s;
}

cplx poisson_disc(const BoundarySamples& samples, cplx v) {
    if (std::abs(v) >= 1.0) throw error(errc::internal, "poisson evaluation point outside the disc");
    const int n = samples.size();
    const double r2 = std::norm(v);
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) {
        cplx e = unit(samples.thetas[k]);
        acc += samples.values[k] * ((1.0 - r2) / std::norm(e - v));
    }
    return acc / double(n);
}

void fft_inplace(std::vector<cplx>& a, bool inverse) {
    const int n = static_cast<int>(a.size());
    if (!is_pow2(n)) throw error(errc::internal, "fft size must be a power of two");
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        double ang = two_pi / len * (inverse ? 1.0 : -1.0);
        cplx wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (int k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx t = a[i + k + len / 2] * w;
                a[i + k] = u + t;
                a[i + k + len / 2] = u - t;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= double(n);
}

BoundarySamples hardy_project(const BoundarySamples& samples) {
    std::vector<cplx> spec = samples.values;
    fft_inplace(spec, false);
    const int n = static_cast<int>(spec.size());
    // Modes n/2..n-1 are the negative frequencies (and the ambiguous Nyquist
    // mode, which cannot belong to the Hardy side).
    for (int k = n / 2; k < n; ++k) spec[k] = 0.0;
    fft_inplace(spec, true);
    BoundarySamples out;
    out.thetas = samples.thetas;
    out.values = std::move(spec);
    return out;
}

cplx fd_normal(const QuadDomain& dom, const std::function<cplx(cplx)>& u, double theta,
               double step) {
    if (step < 1e-6 || step > 1e-2) throw error(errc::internal, "fd step out of range");
    auto fr = dom.frame(theta);
    cplx normal = -cplx(0.0, 1.0) * fr.tangent;  // outward
    cplx u0 = u(fr.z);
    cplx u1 = u(fr.z - step * normal);
    cplx u2 = u(fr.z - 2.0 * step * normal);
    return (3.0 * u0 - 4.0 * u1 + u2) / (2.0 * step);
}

cplx area_integral(const QuadDomain& dom, const Poly& h, int samples) {
    const auto& f = dom.map();
    const auto& fp = dom.map_derivative();
    cplx acc = 0.0;
    for (int k = 0; k < samples; ++k) {
        cplx w = unit(two_pi * k / samples);
        cplx z = f(w);
        acc += h(z) * std::conj(z) * fp(w) * (cplx(0.0, 1.0) * w);
    }
    acc *= two_pi / samples;
    return acc / cplx(0.0, 2.0);
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton on the Legendre
// recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

}  // namespace

cplx area_quadrature_2d(const QuadDomain& dom, const std::function<cplx(cplx)>& F, int nr,
                        int ntheta) {
    std::vector<double> xr, wr;
    gauss_legendre(nr, xr, wr);
    const auto& f = dom.map();
    const auto& fp = dom.map_derivative();
    cplx acc = 0.0;
    for (int i = 0; i < nr; ++i) {
        double r = 0.5 * (xr[i] + 1.0);
        double wgt = 0.5 * wr[i] * r;
        cplx ring = 0.0;
        for (int k = 0; k < ntheta; ++k) {
            cplx v = r * unit(two_pi * k / ntheta);
            ring += F(f(v)) * std::norm(fp(v));
        }
        acc += wgt * ring * (two_pi / ntheta);
    }
    return acc;
}

RationalFit fit_rational_on_circle(const std::vector<double>& thetas,
                                   const std::vector<cplx>& values, int deg_num,
                                   int deg_den) {
    const int nrow = static_cast<int>(thetas.size());
    const int ncol = (deg_num + 1) + deg_den;  // q_0 pinned to 1
    if (nrow < ncol) throw error(errc::internal, "rational fit underdetermined");

    // Rows: sum p_k w^k - y (q_0 + sum_{k>=1} q_k w^k) = 0, i.e.
    // [w^0..w^m, -y w^1..-y w^n] x = y.
    std::vector<std::vector<cplx>> A(nrow, std::vector<cplx>(ncol, 0.0));
    std::vector<cplx> b(nrow);
    for (int i = 0; i < nrow; ++i) {
        cplx w = unit(thetas[i]);
        cplx pw = 1.0;
        for (int k = 0; k <= deg_num; ++k) {
            A[i][k] = pw;
            pw *= w;
        }
        pw = w;
        for (int k = 1; k <= deg_den; ++k) {
            A[i][deg_num + k] = -values[i] * pw;
            pw *= w;
        }
        b[i] = values[i];
    }

    // Householder QR least squares.
    for (int col = 0; col < ncol; ++col) {
        double nrm = 0.0;
        for (int i = col; i < nrow; ++i) nrm += std::norm(A[i][col]);
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) continue;
        cplx alpha = (std::abs(A[col][col]) > 0.0)
                         ? -(A[col][col] / std::abs(A[col][col])) * nrm
                         : cplx(-nrm);
        std::vector<cplx> vvec(nrow, 0.0);
        for (int i = col; i < nrow; ++i) vvec[i] = A[i][col];
        vvec[col] -= alpha;
        double vnorm2 = 0.0;
        for (int i = col; i < nrow; ++i) vnorm2 += std::norm(vvec[i]);
        if (vnorm2 == 0.0) continue;
        for (int j = col; j < ncol; ++j) {
            cplx dot = 0.0;
            for (int i = col; i < nrow; ++i) dot += std::conj(vvec[i]) * A[i][j];
            dot *= 2.0 / vnorm2;
            for (int i = col; i < nrow; ++i) A[i][j] -= dot * vvec[i];
        }
        cplx dotb = 0.0;
        for (int i = col; i < nrow; ++i) dotb += std::conj(vvec[i]) * b[i];
        dotb *= 2.0 / vnorm2;
        for (int i = col; i < nrow; ++i) b[i] -= dotb * vvec[i];
    }
    std::vector<cplx> x(ncol, 0.0);
    for (int i = ncol - 1; i >= 0; --i) {
        cplx s = b[i];
        for (int j = i + 1; j < ncol; ++j) s -= A[i][j] * x[j];
        if (std::abs(A[i][i]) < 1e-14)
            throw error(errc::internal, "rational fit is rank deficient");
        x[i] = s / A[i][i];
    }

    std::vector<cplx> pc(x.begin(), x.begin() + deg_num + 1);
    std::vector<cplx> qc(deg_den + 1, 0.0);
    qc[0] = 1.0;
    for (int k = 1; k <= deg_den; ++k) qc[k] = x[deg_num + k];

    RationalFit out;
    out.fit = RationalFn(Poly(std::move(pc)), Poly(std::move(qc)));
    for (int i = 0; i < nrow; ++i)
        out.residual = std::max(out.residual, std::abs(out.fit(unit(thetas[i])) - values[i]));
    return out;
}

cplx gl_segment_integral(const RationalFn& f, cplx a, cplx b, int panels) {
    static std::vector<double> x16, w16;
    if (x16.empty()) gauss_legendre(16, x16, w16);
    cplx acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        cplx pa = a + (b - a) * (double(p) / panels);
        cplx pb = a + (b - a) * (double(p + 1) / panels);
        cplx mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
        for (int i = 0; i < 16; ++i) acc += w16[i] * f(mid + half * x16[i]) * half;
    }
    return acc;
}

}  // namespace oracle
}  // namespace qdpot
