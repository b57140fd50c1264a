#include "qdpot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdpot {
namespace verify {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
cplx unit(double theta) { return cplx(std::cos(theta), std::sin(theta)); }

cplx rand_cplx(std::mt19937& rng, double mag) {
    std::uniform_real_distribution<double> d(-mag, mag);
    return cplx(d(rng), d(rng));
}

// Multiply coefficient matrices of polynomials in (z, s).
BiRational::CoeffMatrix mat_mul(const BiRational::CoeffMatrix& a,
                                const BiRational::CoeffMatrix& b) {
    std::size_t rows = a.size() + b.size() - 1;
    std::size_t cols = 0;
    for (const auto& r : a)
        for (const auto& rb : b) cols = std::max(cols, r.size() + rb.size() - 1);
    BiRational::CoeffMatrix out(rows, std::vector<cplx>(cols, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j] == cplx(0.0)) continue;
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b[k].size(); ++l)
                    out[i + k][j + l] += a[i][j] * b[k][l];
        }
    return out;
}

// A point whose value stays at least `margin` away from the given curve.
cplx off_curve_point(std::mt19937& rng, const std::vector<cplx>& curve, double margin,
                     double spread) {
    for (int tries = 0; tries < 200; ++tries) {
        cplx c = rand_cplx(rng, spread);
        double dmin = 1e300;
        for (const auto& z : curve) dmin = std::min(dmin, std::abs(z - c));
        if (dmin >= margin) return c;
    }
    throw error(errc::internal, "could not place an off-curve denominator factor");
}

}  // namespace

BiRational random_birational(std::mt19937& rng, const QuadDomain& dom) {
    std::vector<cplx> curve(256), conj_curve(256);
    for (int k = 0; k < 256; ++k) {
        curve[k] = dom.map()(unit(two_pi * k / 256));
        conj_curve[k] = std::conj(curve[k]);
    }
    const double margin = 0.3 * std::max(1.0, dom.boundary_scale());
    const double spread = 2.0 * dom.boundary_scale();

    // Numerator: degrees <= 3 jointly in z and s, magnitudes <= 2.
    std::uniform_int_distribution<int> degd(1, 3);
    int dz = degd(rng), ds = degd(rng);
    BiRational::CoeffMatrix num(dz + 1, std::vector<cplx>(ds + 1, 0.0));
    for (auto& row : num)
        for (auto& c : row) c = rand_cplx(rng, 1.4);

    // Denominator: product of up to two factors (z - c) or (s - d), each kept
    // off the (conjugated) boundary curve.
    BiRational::CoeffMatrix den{{cplx(1.0)}};
    std::uniform_int_distribution<int> nfac(0, 2);
    int k = nfac(rng);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < k; ++i) {
        if (coin(rng) == 0) {
            cplx c = off_curve_point(rng, curve, margin, spread);
            den = mat_mul(den, {{-c}, {cplx(1.0)}});
        } else {
            cplx d = off_curve_point(rng, conj_curve, margin, spread);
            den = mat_mul(den, {{-d, cplx(1.0)}});
        }
    }
    return BiRational(std::move(num), std::move(den));
}

RationalFn random_analytic_on_closed_disc(std::mt19937& rng, int deg, double mag) {
    std::vector<cplx> nc(deg + 1);
    for (auto& c : nc) c = rand_cplx(rng, mag);
    std::uniform_real_distribution<double> rd(1.5, 3.0), ad(0.0, two_pi);
    std::uniform_int_distribution<int> np(0, 1);
    Poly den = Poly::one();
    for (int i = 0, n = np(rng); i < n; ++i) {
        cplx p = rd(rng) * unit(ad(rng));
        den = den * Poly(std::vector<cplx>{-p, 1.0});
    }
    return RationalFn(Poly(std::move(nc)), std::move(den));
}

RationalFn random_dtn_image_trace(std::mt19937& rng, const QuadDomain& dom) {
    for (int tries = 0; tries < 50; ++tries) {
        try {
            BiRational data = random_birational(rng, dom);
            DtnResult res = dtn_map(dom, cplx(0.0), data);
            if (res.rational_trace) return *res.rational_trace;
        } catch (const error&) {
            continue;  // unlucky draw (singular trace); redraw
        }
    }
    throw error(errc::internal, "could not generate a D-to-N image trace");
}

namespace {

void push(std::vector<CheckResult>& out, const std::string& name, double value, double bound) {
    out.push_back({name, value <= bound, value, bound});
}

}  // namespace

std::vector<CheckResult> run_all(const QuadDomain& dom, const Options& opts) {
    std::vector<CheckResult> out;
    std::mt19937 rng(opts.seed);
    const int N = opts.samples;

    // Schwarz identity: sigma(w) = conj(f(w)) on the circle.
    {
        double worst = 0.0;
        for (int k = 0; k < N; ++k) {
            cplx w = unit(two_pi * k / N);
            worst = std::max(worst,
                             std::abs(dom.schwarz_pullback()(w) - std::conj(dom.map()(w))));
        }
        push(out, "schwarz identity", worst, 1e-10 * (1.0 + dom.boundary_scale()));
    }

    // Quadrature identity against the Green's-theorem oracle.
    {
        auto nodes = dom.quadrature_data().nodes;
        double worst = 0.0;
        Poly h = Poly::one();
        for (int d = 0; d <= 4; ++d) {
            if (d > 0) h = h * Poly::variable();
            cplx lhs = oracle::area_integral(dom, h);
            cplx rhs = 0.0;
            for (const auto& node : nodes) {
                Poly hd = h;
                for (int m = 0; m < node.order; ++m) hd = hd.derivative();
                rhs += node.coefficient * hd(node.point);
            }
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
        }
        push(out, "area quadrature identity (h = 1..z^4)", worst, 1e-6);
    }

    // Map inversion round trip.
    {
        double worst = 0.0;
        std::uniform_real_distribution<double> rd(0.0, 0.95), ad(0.0, two_pi);
        for (int k = 0; k < 100; ++k) {
            cplx v = rd(rng) * unit(ad(rng));
            worst = std::max(worst, std::abs(dom.invert(dom.map()(v)) - v));
        }
        push(out, "invert(map) identity", worst, 1e-9);
    }

    // Double witness consistency.
    if (dom.is_double()) {
        const RationalFn& q = *dom.double_witness();
        double w1 = 0.0, w2 = 0.0;
        for (int k = 0; k < N; ++k) {
            auto fr = dom.frame(two_pi * k / N);
            w1 = std::max(w1, std::abs(q(fr.w) * q(fr.w) - dom.map_derivative()(fr.w)));
            w2 = std::max(w2, std::abs(q(fr.w) * reflect(q)(fr.w) - fr.speed));
        }
        push(out, "witness q^2 = f' on boundary", w1, 1e-10 * (1.0 + dom.boundary_scale()));
        push(out, "witness q reflect(q) = speed", w2, 1e-10 * (1.0 + dom.boundary_scale()));
    }

    // Kernel identities for m = 0, 1, 2 at the origin and random parameters.
    {
        std::uniform_real_distribution<double> rd(0.0, 0.6), ad(0.0, two_pi);
        std::vector<cplx> params{cplx(0.0), rd(rng) * unit(ad(rng)), rd(rng) * unit(ad(rng))};
        double worst = 0.0;
        for (const auto& v : params)
            for (int m = 0; m <= 2; ++m) {
                worst = std::max(worst, identity_residual(dom, KernelIdentity::SL2, v, m, N));
                worst = std::max(worst, identity_residual(dom, KernelIdentity::BL2, v, m, N));
            }
        push(out, "kernel identities (SL),(SL2),(BL),(BL2)", worst, 1e-8);
    }

    // Szego reproducing property for g in {1, z, z^2}.
    {
        std::uniform_real_distribution<double> rd(0.0, 0.6), ad(0.0, two_pi);
        cplx v = rd(rng) * unit(ad(rng));
        KernelElement sa = kernel_element(dom, KernelKind::szego, v, 0);
        double worst = 0.0;
        for (int d = 0; d <= 2; ++d) {
            cplx acc = 0.0;
            for (int k = 0; k < 1024; ++k) {
                auto fr = dom.frame(two_pi * k / 1024);
                cplx g = std::pow(fr.z, d);
                acc += g * std::conj(eval_element(sa, dom, fr.w)) * fr.speed;
            }
            acc *= two_pi / 1024;
            cplx target = std::pow(dom.map()(v), d);
            worst = std::max(worst, std::abs(acc - target));
        }
        push(out, "szego reproducing property", worst, 1e-8 * (1.0 + std::pow(dom.boundary_scale(), 2)));
    }

    // Hermitian symmetry of Szego and Bergman values.
    {
        std::uniform_real_distribution<double> rd(0.0, 0.8), ad(0.0, two_pi);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            cplx v1 = rd(rng) * unit(ad(rng));
            cplx v2 = rd(rng) * unit(ad(rng));
            if (std::abs(v1 - v2) < 0.05) continue;
            KernelElement s1 = kernel_element(dom, KernelKind::szego, v1, 0);
            KernelElement s2 = kernel_element(dom, KernelKind::szego, v2, 0);
            worst = std::max(worst, std::abs(eval_element(s1, dom, v2) -
                                             std::conj(eval_element(s2, dom, v1))));
            KernelElement b1 = kernel_element(dom, KernelKind::bergman, v1, 0);
            KernelElement b2 = kernel_element(dom, KernelKind::bergman, v2, 0);
            worst = std::max(worst, std::abs(eval_element(b1, dom, v2) -
                                             std::conj(eval_element(b2, dom, v1))));
        }
        push(out, "kernel hermitian symmetry", worst, 1e-9);
    }

    // Basic decomposition on random data: residual and Hardy orthogonality of
    // the Garabedian part.
    {
        double worst_res = 0.0, worst_orth = 0.0;
        int made = 0;
        for (int i = 0; i < opts.fixtures && made < opts.fixtures; ++i) {
            BiRational data = random_birational(rng, dom);
            Decomposition dec;
            try {
                dec = basic_decomposition(dom, cplx(0.0), data);
            } catch (const error& e) {
                if (e.code() == errc::singular_data) continue;  // redraw-worthy draw
                throw;
            }
            ++made;
            worst_res = std::max(worst_res, dec.residual);
            for (int d = 0; d <= 2; ++d) {
                cplx acc = 0.0;
                for (int k = 0; k < 512; ++k) {
                    auto fr = dom.frame(two_pi * k / 512);
                    cplx g = std::pow(fr.z, d);
                    acc += g * std::conj(dec.garabedian_terms.eval(dom, fr.w)) * fr.speed;
                }
                acc *= two_pi / 512;
                worst_orth = std::max(worst_orth, std::abs(acc));
            }
        }
        push(out, "decomposition boundary residual", worst_res, 1e-6);
        push(out, "garabedian part orthogonal to Hardy space", worst_orth,
             1e-7 * (1.0 + std::pow(dom.boundary_scale(), 3)));
    }

    // Dirichlet solutions against the Poisson oracle in the disc parameter,
    // plus anchor independence.
    {
        std::uniform_real_distribution<double> rd(0.0, 0.8), ad(0.0, two_pi);
        double worst = 0.0, worst_anchor = 0.0;
        int made = 0;
        for (int i = 0; i < opts.fixtures && made < opts.fixtures; ++i) {
            BiRational data = random_birational(rng, dom);
            HarmonicRep rep;
            try {
                rep = dirichlet_solve(dom, cplx(0.0), data);
            } catch (const error& e) {
                if (e.code() == errc::singular_data) continue;
                throw;
            }
            ++made;
            auto samples = oracle::BoundarySamples::from_fn(1024, [&](double th) {
                return rep.boundary_value(unit(th));
            });
            double sup = 0.0;
            for (const auto& vv : samples.values) sup = std::max(sup, std::abs(vv));
            HarmonicRep rep2 = dirichlet_solve(dom, cplx(0.3, 0.2), data);
            for (int k = 0; k < 20; ++k) {
                cplx v = rd(rng) * unit(ad(rng));
                cplx mine = harmonic_eval(rep, dom, v);
                worst = std::max(worst,
                                 std::abs(mine - oracle::poisson_disc(samples, v)) / (1.0 + sup));
                worst_anchor =
                    std::max(worst_anchor, std::abs(mine - harmonic_eval(rep2, dom, v)) / (1.0 + sup));
            }
        }
        push(out, "dirichlet matches poisson oracle", worst, 1e-8);
        push(out, "anchor independence", worst_anchor, 1e-7);
    }

    // D-to-N against the finite-difference oracle on the closed form.
    {
        BiRational data = random_birational(rng, dom);
        HarmonicRep rep;
        DtnResult res;
        try {
            rep = dirichlet_solve(dom, cplx(0.0), data);
            res = dtn_map(dom, rep);
        } catch (const error&) {
            rep = dirichlet_solve(dom, cplx(0.0), BiRational({{cplx(0.0), cplx(1.0)}, {cplx(1.0)}},
                                                             {{cplx(1.0)}}));
            res = dtn_map(dom, rep);
        }
        auto u_eval = [&](cplx z) { return harmonic_eval(rep, dom, dom.invert(z)); };
        double sup = 0.0, worst = 0.0;
        for (int k = 0; k < 64; ++k) {
            double theta = two_pi * k / 64;
            cplx mine = res.normal_derivative(theta);
            sup = std::max(sup, std::abs(mine));
            worst = std::max(worst, std::abs(mine - oracle::fd_normal(dom, u_eval, theta, 1e-4)));
        }
        push(out, "d-to-n matches fd oracle", worst, 1e-6 * (1.0 + sup));
    }

    // Double-quadrature solvers: rational trace certificate, split round
    // trip, D-to-N inverse identity and the Neumann solver.
    if (dom.is_double()) {
        RationalFn psi = random_dtn_image_trace(rng, dom);
        // Certify rationality independently of the closed form.
        auto th = std::vector<double>(N);
        auto vals = std::vector<cplx>(N);
        for (int k = 0; k < N; ++k) {
            th[k] = two_pi * k / N;
            vals[k] = psi(unit(th[k]));
        }
        int dn = psi.numer().degree() + 2, dd = psi.denom().degree() + 2;
        auto fit = oracle::fit_rational_on_circle(th, vals, dn, dd);
        push(out, "d-to-n trace certified rational", fit.residual, 1e-8 * (1.0 + fit.fit.scale()));

        SplitPair sp = tangential_split(dom, psi);
        double worst = 0.0;
        for (int k = 0; k < N; ++k) {
            auto fr = dom.frame(th[k]);
            cplx got = sp.kappa1_hat(fr.w) * fr.tangent + std::conj(sp.kappa2_hat(fr.w) * fr.tangent);
            worst = std::max(worst, std::abs(got - vals[k]));
        }
        push(out, "tangential split residual", worst, 1e-8 * (1.0 + fit.fit.scale()));

        HarmonicRep sol = neumann_solve(dom, psi);
        DtnResult back = dtn_map(dom, sol);
        double rt = 0.0, sup = 0.0;
        for (int k = 0; k < N; ++k) {
            sup = std::max(sup, std::abs(vals[k]));
            rt = std::max(rt, std::abs(back.normal_derivative(th[k]) - vals[k]));
        }
        push(out, "neumann round trip", rt, 1e-7 * (1.0 + sup));
    }

    return out;
}

}  // namespace verify
}  // namespace qdpot
