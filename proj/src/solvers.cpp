#include "qdpot/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdpot {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
cplx unit(double theta) { return cplx(std::cos(theta), std::sin(theta)); }
const cplx i_unit(0.0, 1.0);

// Exact division by w of a rational vanishing at the origin: zero the
// constant numerator coefficient (a numerical zero by construction) and
// shift. Requires den(0) != 0.
RationalFn divide_by_w(const RationalFn& r) {
    if (r.is_zero()) return r;
    if (r.denom()(cplx(0.0)) == cplx(0.0))
        throw error(errc::internal, "divide_by_w: denominator vanishes at origin");
    std::vector<cplx> c = r.numer().coeffs();
    if (c.empty()) return RationalFn();
    c.erase(c.begin());
    return RationalFn(Poly(std::move(c)), r.denom());
}

// Rational antiderivative through partial fractions. Poles must carry
// residues below the gate (logarithm obstruction); the tiny leftovers are
// numerical zeros and are dropped.
RationalFn rational_antiderivative(const RationalFn& f, const char* residue_error) {
    auto pf = partial_fractions(f);
    const double fs = std::max(1.0, f.scale());
    RationalFn acc;

    const auto& c = pf.polynomial.coeffs();
    std::vector<cplx> ic(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) ic[k + 1] = c[k] / double(k + 1);
    acc += RationalFn(Poly(std::move(ic)));

    for (const auto& pp : pf.parts) {
        if (std::abs(pp.residue()) > 1e-9 * fs) throw error(errc::incompatible_data, residue_error);
        PrincipalPart anti;
        anti.pole = pp.pole;
        anti.coeffs.assign(std::max(pp.order() - 1, 0), 0.0);
        for (int j = 2; j <= pp.order(); ++j) anti.coeffs[j - 2] = pp.coeffs[j - 1] / double(1 - j);
        if (!anti.empty()) acc += anti.to_rational();
    }
    // Gauge: vanish at the disc centre.
    acc -= RationalFn::constant(acc(cplx(0.0)));
    return acc;
}

}  // namespace

cplx harmonic_eval(const HarmonicRep& rep, const QuadDomain& dom, cplx v) {
    (void)dom;
    if (std::abs(v) >= 1.0)
        throw error(errc::invalid_domain, "evaluation point outside the open disc");
    cplx val = rep.h_hat(v) + std::conj(rep.H_hat(v));
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
        throw error(errc::residual, "invalid representation");
    return val;
}

HarmonicRep dirichlet_solve(const QuadDomain& dom, cplx a_param, const BiRational& R,
                            const DecompOptions& opts) {
    RationalFn rho = pullback_boundary_data(dom, R);
    Decomposition dec = decompose_trace(dom, a_param, rho, opts);

    RationalFn sa_red = kernel_element(dom, KernelKind::szego, a_param, 0).reduced;
    RationalFn la_red = kernel_element(dom, KernelKind::garabedian, a_param, 0).reduced;

    HarmonicRep rep;
    rep.anchor = a_param;
    rep.provenance = "dirichlet";
    rep.h_hat = dec.szego_terms.reduced_sum() / sa_red;

    // sigma_2 mirrors the Garabedian coefficients with conjugated constants
    // on Szego elements at the same points and orders.
    RationalFn sigma2;
    for (const auto& t : dec.garabedian_terms.terms) {
        KernelElement mirror =
            kernel_element(dom, KernelKind::szego, t.element.param, t.element.order);
        sigma2 += mirror.reduced * std::conj(t.coefficient);
    }
    rep.H_hat = sigma2 / la_red;

    double sup = 0.0, worst = 0.0;
    for (int k = 0; k < opts.samples; ++k) {
        cplx w = unit(two_pi * k / opts.samples);
        cplx target = rho(w);
        sup = std::max(sup, std::abs(target));
        worst = std::max(worst, std::abs(rep.boundary_value(w) - target));
    }
    if (worst > tol::solver * (1.0 + sup))
        throw error(errc::residual, "solver residual " + std::to_string(worst));
    return rep;
}

DtnResult dtn_map(const QuadDomain& dom, const HarmonicRep& rep) {
    DtnResult out;
    RationalFn hp = rep.h_hat.derivative();
    RationalFn Hp = rep.H_hat.derivative();
    const RationalFn fp = dom.map_derivative();
    out.normal_derivative = [hp, Hp, fp](double theta) {
        cplx w = unit(theta);
        return (w * hp(w) + std::conj(w * Hp(w))) / std::abs(fp(w));
    };
    if (dom.is_double()) {
        const RationalFn& q = *dom.double_witness();
        RationalFn speed = q * reflect(q);  // equals |f'| on the circle
        RationalFn wvar = RationalFn::variable();
        out.rational_trace = (wvar * hp + reflect(Hp) / wvar) / speed;
    }
    return out;
}

DtnResult dtn_map(const QuadDomain& dom, cplx a_param, const BiRational& R,
                  const DecompOptions& opts) {
    return dtn_map(dom, dirichlet_solve(dom, a_param, R, opts));
}

SplitPair tangential_split(const QuadDomain& dom, const RationalFn& psi) {
    if (!dom.is_double())
        throw error(errc::invalid_domain, "not a double quadrature domain");
    const RationalFn& q = *dom.double_witness();
    RationalFn speed = q * reflect(q);
    RationalFn theta_fn = psi * speed * (-i_unit);

    CircleSplit sp = circle_split(theta_fn);

    double sup = 0.0;
    for (int k = 0; k < 256; ++k) sup = std::max(sup, std::abs(theta_fn(unit(two_pi * k / 256))));
    cplx mean = sp.inner(cplx(0.0));
    if (std::abs(mean) > 1e-8 * (1.0 + sup))
        throw error(errc::incompatible_data, "incompatible data (nonzero mean)");

    const RationalFn fp = dom.map_derivative();
    SplitPair pair;
    pair.kappa1_hat = divide_by_w(sp.inner - RationalFn::constant(mean)) / fp;
    pair.kappa2_hat = -(divide_by_w(reflect(sp.outer)) / fp);

    double worst = 0.0, psup = 0.0;
    for (int k = 0; k < 256; ++k) {
        auto fr = dom.frame(two_pi * k / 256);
        cplx target = psi(fr.w);
        cplx got = pair.kappa1_hat(fr.w) * fr.tangent +
                   std::conj(pair.kappa2_hat(fr.w) * fr.tangent);
        psup = std::max(psup, std::abs(target));
        worst = std::max(worst, std::abs(got - target));
    }
    if (worst > tol::solver * (1.0 + psup))
        throw error(errc::residual, "split failed (residual " + std::to_string(worst) + ")");
    return pair;
}

HarmonicRep dtn_inverse(const QuadDomain& dom, const RationalFn& psi) {
    SplitPair sp = tangential_split(dom, psi);
    const RationalFn fp = dom.map_derivative();
    RationalFn hp_hat = i_unit * sp.kappa1_hat * fp;
    RationalFn Hp_hat = i_unit * sp.kappa2_hat * fp;

    HarmonicRep rep;
    rep.anchor = 0.0;
    rep.provenance = "dtn_inverse";
    rep.h_hat = rational_antiderivative(hp_hat, "not in D-to-N range as represented");
    rep.H_hat = rational_antiderivative(Hp_hat, "not in D-to-N range as represented");
    return rep;
}

HarmonicRep neumann_solve(const QuadDomain& dom, const RationalFn& psi) {
    // Arc-length mean by trapezoid quadrature, independent of the split.
    const int n = 512;
    cplx mean = 0.0;
    double sup = 0.0;
    for (int k = 0; k < n; ++k) {
        auto fr = dom.frame(two_pi * k / n);
        cplx val = psi(fr.w);
        sup = std::max(sup, std::abs(val));
        mean += val * fr.speed;
    }
    mean *= two_pi / n;
    if (std::abs(mean) > 1e-8 * (1.0 + sup) * (1.0 + dom.boundary_scale()))
        throw error(errc::incompatible_data, "incompatible data (nonzero mean)");

    HarmonicRep rep = dtn_inverse(dom, psi);
    rep.provenance = "neumann";

    // Round-trip guard: the algebraic normal derivative must reproduce psi.
    DtnResult back = dtn_map(dom, rep);
    double worst = 0.0;
    for (int k = 0; k < 256; ++k) {
        double theta = two_pi * k / 256;
        worst = std::max(worst, std::abs(back.normal_derivative(theta) - psi(unit(theta))));
    }
    if (worst > 1e-7 * (1.0 + sup))
        throw error(errc::residual, "solver residual " + std::to_string(worst));
    return rep;
}

BergmanDecomposition bergman_decompose(const QuadDomain& dom, const RationalFn& r_pullback) {
    const char* err = "not a derivative of a meromorphic extension element";
    BergmanDecomposition out;
    for (const auto& t : detail::match_interior_parts(dom, KernelKind::lambda, r_pullback, err)) {
        out.lambda.terms.push_back(
            {t.coeff, kernel_element(dom, KernelKind::lambda, t.param, t.order)});
    }
    // Reflected route: interior parts of reflect(r)/w^2 carry the conjugated
    // Bergman coefficients at the same points.
    RationalFn w2(Poly(std::vector<cplx>{0.0, 0.0, 1.0}));
    RationalFn mirrored = reflect(r_pullback) / w2;
    for (const auto& t : detail::match_interior_parts(dom, KernelKind::lambda, mirrored, err)) {
        out.kappa.terms.push_back(
            {std::conj(t.coeff), kernel_element(dom, KernelKind::bergman, t.param, t.order)});
    }
    out.kappa.sort_canonical();
    out.lambda.sort_canonical();

    // Interior-grid verification of r = kappa + lambda (reduced parts; the
    // common f' factor of the 1-form pullback cancels).
    RationalFn recombined = out.kappa.reduced_sum() + out.lambda.reduced_sum();
    double scale = std::max(1.0, r_pullback.scale());
    double worst = 0.0;
    for (int ir = 1; ir <= 4; ++ir) {
        for (int k = 0; k < 16; ++k) {
            cplx v = 0.2 * ir * unit(two_pi * k / 16.0);
            cplx a = r_pullback(v), b = recombined(v);
            if (!std::isfinite(a.real()) || !std::isfinite(b.real())) continue;
            if (std::abs(a) > 1e6 * scale) continue;  // next to a pole
            worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
        }
    }
    if (worst > 1e-8)
        throw error(errc::residual, "bergman decomposition residual " + std::to_string(worst));
    return out;
}

SpanElement complementary_function(const SpanElement& s) {
    SpanElement out;
    RationalFn w2(Poly(std::vector<cplx>{0.0, 0.0, 1.0}));
    for (const auto& t : s.terms) {
        if (t.element.kind != KernelKind::bergman && t.element.kind != KernelKind::lambda)
            throw error(errc::internal, "complementary function is defined on Bergman/Lambda spans");
        KernelElement e;
        e.kind = (t.element.kind == KernelKind::bergman) ? KernelKind::lambda : KernelKind::bergman;
        e.order = t.element.order;
        e.param = t.element.param;
        e.power = -1.0;
        e.reduced = reflect(t.element.reduced) / w2;
        out.terms.push_back({std::conj(t.coefficient), e});
    }
    return out;
}

}  // namespace qdpot
