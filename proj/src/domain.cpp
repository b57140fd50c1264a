#include "qdpot/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdpot/jets.hpp"

namespace qdpot {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

cplx unit(double theta) { return cplx(std::cos(theta), std::sin(theta)); }

// Winding number of the boundary image around z0, from accumulated argument
// increments over a dense sample of f(e^{i theta}).
int boundary_winding(const RationalFn& f, cplx z0, int samples) {
    double acc = 0.0;
    cplx prev = f(unit(0.0)) - z0;
    for (int k = 1; k <= samples; ++k) {
        cplx cur = f(unit(two_pi * k / samples)) - z0;
        acc += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(acc / two_pi));
}

}  // namespace

QuadDomain QuadDomain::make(RationalFn f, std::optional<RationalFn> q) {
    QuadDomain dom;
    dom.f_ = std::move(f);
    dom.fp_ = dom.f_.derivative();
    if (dom.fp_.is_zero())
        throw error(errc::invalid_domain, "map not univalent: constant map");
    dom.sigma_ = reflect(dom.f_);

    // Poles of f strictly outside the closed disc.
    for (const auto& p : dom.f_.poles()) {
        if (std::abs(p.location) <= 1.0 + tol::circle)
            throw error(errc::invalid_domain, "map not analytic on closure");
    }
    // f' nonvanishing on the closed disc (cusps excluded).
    if (dom.fp_.numer().degree() > 0) {
        for (const auto& r : poly_roots(dom.fp_.numer())) {
            if (std::abs(r.location) <= 1.0 + tol::circle)
                throw error(errc::invalid_domain, "critical point (cusp risk)");
        }
    }

    // Boundary scale and self-intersection scan over 512 samples.
    const int ns = 512;
    std::vector<cplx> bz(ns);
    double scale = 0.0;
    for (int k = 0; k < ns; ++k) {
        bz[k] = dom.f_(unit(two_pi * k / ns));
        scale = std::max(scale, std::abs(bz[k]));
    }
    dom.boundary_scale_ = std::max(scale, 1e-12);
    const double sep_tol = 1e-8 * dom.boundary_scale_;
    for (int i = 0; i < ns; ++i) {
        for (int j = i + 1; j < ns; ++j) {
            int gap = std::min(j - i, ns - (j - i));
            if (gap < ns / 16) continue;  // neighbours along the curve may be close
            if (std::abs(bz[i] - bz[j]) < sep_tol)
                throw error(errc::invalid_domain, "not univalent (boundary self-intersection)");
        }
    }

    // Argument-principle count: the boundary image must wind exactly once
    // around each of 32 interior probe points.
    for (int ring = 0; ring < 2; ++ring) {
        double r = (ring == 0) ? 0.3 : 0.6;
        for (int k = 0; k < 16; ++k) {
            cplx z0 = dom.f_(r * unit(two_pi * k / 16.0));
            if (boundary_winding(dom.f_, z0, 4096) != 1)
                throw error(errc::invalid_domain, "not univalent (winding != 1)");
        }
    }

    // Double-quadrature witness.
    if (q) {
        RationalFn q2 = (*q) * (*q);
        RationalFn diff = q2 - dom.fp_;
        double ref = std::max(dom.fp_.numer().scale(), q2.numer().scale());
        if (!diff.is_zero() && diff.numer().scale() > tol::witness * std::max(ref, 1.0))
            throw error(errc::invalid_domain, "invalid double witness");
        dom.q_ = std::move(*q);
    }

    // Even-multiplicity hint for a rational square root of f'.
    dom.even_hint_ = true;
    if (dom.fp_.numer().degree() > 0) {
        for (const auto& r : poly_roots(dom.fp_.numer()))
            if (r.multiplicity % 2 != 0) dom.even_hint_ = false;
    }
    for (const auto& p : dom.fp_.poles())
        if (p.multiplicity % 2 != 0) dom.even_hint_ = false;

    // Seed grid for invert(); 64 angles x 32 radii.
    for (int ir = 0; ir < 32; ++ir) {
        double rr = (ir + 0.5) / 32.0;
        for (int it = 0; it < 64; ++it) {
            cplx v = rr * unit(two_pi * it / 64.0);
            dom.seed_points_.push_back(v);
            dom.seed_values_.push_back(dom.f_(v));
        }
    }

    if (dom.q_) {
        // Align the witness sign with the continuous sqrt branch.
        cplx qv = (*dom.q_)(cplx(0.0));
        cplx gv = dom.fprime_sqrt(cplx(0.0));
        dom.witness_sign_ = (std::abs(qv - gv) <= std::abs(qv + gv)) ? 1.0 : -1.0;
    }
    return dom;
}

RationalFn QuadDomain::signed_witness() const {
    if (!q_) throw error(errc::invalid_domain, "not a double quadrature domain");
    return (*q_) * cplx(witness_sign_);
}

BoundaryFrame QuadDomain::frame(double theta) const {
    BoundaryFrame fr;
    fr.theta = theta;
    fr.w = unit(theta);
    fr.z = f_(fr.w);
    cplx d = fp_(fr.w);
    fr.speed = std::abs(d);
    fr.tangent = cplx(0.0, 1.0) * fr.w * d / fr.speed;
    return fr;
}

QuadratureData QuadDomain::quadrature_data() const {
    // Residues of (1/2i) times the boundary integral of h(f(w)) sigma(w) f'(w):
    // each interior pole p of sigma*f' contributes pi * sum_j d_j t_{j-1},
    // where d_j are principal-part coefficients and t_n expands h(f(w)) about
    // p in terms of h-derivatives at a = f(p).
    QuadratureData out;
    RationalFn g = sigma_ * fp_;
    auto pf = partial_fractions(g);
    for (const auto& pp : pf.parts) {
        if (std::abs(pp.pole) >= 1.0) continue;
        const int K = pp.order();
        const cplx a = f_(pp.pole);
        // phi_i = Taylor coefficients of f - a about the pole, phi_0 = 0.
        auto phi = f_.taylor(pp.pole, K - 1);
        phi[0] = 0.0;
        // Powers of phi as truncated jets; row m holds (f-a)^m / m!-weighted
        // contributions of h^{(m)}(a).
        std::vector<Jet> phi_pow(K);
        phi_pow[0] = Jet(K, 0.0);
        phi_pow[0][0] = 1.0;
        for (int m = 1; m < K; ++m) phi_pow[m] = jet_mul(phi_pow[m - 1], phi, K - 1);
        // gamma_m = sum_j d_j [ (f-a)^m ]_{j-1} / m!
        double fact = 1.0;
        for (int m = 0; m < K; ++m) {
            if (m > 0) fact *= m;
            cplx gamma = 0.0;
            for (int j = 1; j <= K; ++j) gamma += pp.coeffs[j - 1] * phi_pow[m][j - 1];
            gamma *= std::numbers::pi / fact;
            if (std::abs(gamma) > 1e-14 * (1.0 + boundary_scale_ * boundary_scale_))
                out.nodes.push_back({a, m, gamma});
        }
    }
    return out;
}

cplx QuadDomain::invert(cplx z) const {
    // Nearest seed, then Newton.
    std::size_t best = 0;
    double bd = std::abs(seed_values_[0] - z);
    for (std::size_t k = 1; k < seed_values_.size(); ++k) {
        double d = std::abs(seed_values_[k] - z);
        if (d < bd) {
            bd = d;
            best = k;
        }
    }
    cplx v = seed_points_[best];
    const double tol_conv = 1e-12 * std::max(1.0, boundary_scale_);
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
        cplx fv = f_(v) - z;
        if (std::abs(fv) <= tol_conv) {
            ok = true;
            break;
        }
        cplx dv = fp_(v);
        if (std::abs(dv) == 0.0) break;
        cplx step = fv / dv;
        // Keep the iterate from escaping far outside the closed disc.
        cplx next = v - step;
        if (std::abs(next) > 1.25) next = v - 0.25 * step;
        v = next;
    }
    if (!ok || std::abs(v) >= 1.0 - 1e-9)
        throw error(errc::invalid_domain, "point not in domain");
    if (std::abs(f_(v) - z) > 1e-10 * std::max(1.0, boundary_scale_))
        throw error(errc::invalid_domain, "point not in domain");
    return v;
}

cplx QuadDomain::fprime_sqrt(cplx w) const {
    // Continue the principal square root at 0 along the segment to w;
    // f' nonvanishing on the closed disc keeps the branch single-valued.
    int n = 48;
    for (;;) {
        cplx s = std::sqrt(fp_(cplx(0.0)));
        bool fine = true;
        for (int k = 1; k <= n; ++k) {
            cplx t = w * (double(k) / n);
            cplx r = std::sqrt(fp_(t));
            if (std::abs(r - s) > std::abs(r + s)) r = -r;
            if (std::abs(r - s) > 0.75 * std::abs(s)) {
                fine = false;
                break;
            }
            s = r;
        }
        if (fine) return s;
        n *= 2;
        if (n > 6144) throw error(errc::internal, "sqrt branch continuation failed");
    }
}

}  // namespace qdpot
