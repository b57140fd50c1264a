#include "qdpot/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdpot/jets.hpp"

namespace qdpot {

namespace {

constexpr double pi = std::numbers::pi;

// Jet whose coefficients are rational functions of w; the jet direction is
// the kernel parameter.
struct RatJet {
    std::vector<RationalFn> c;
};

RatJet ratjet_scale(const RatJet& a, const Jet& s, int order) {
    RatJet r;
    r.c.assign(order + 1, RationalFn());
    for (int i = 0; i <= order && i < static_cast<int>(a.c.size()); ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(s.size()); ++j) {
            if (s[j] == cplx(0.0)) continue;
            r.c[i + j] += a.c[i] * s[j];
        }
    }
    return r;
}

RatJet ratjet_diff(const RatJet& a) {
    RatJet r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t k = 1; k < a.c.size(); ++k) r.c[k - 1] = a.c[k] * cplx(double(k));
    return r;
}

}  // namespace

KernelElement kernel_element(const QuadDomain& dom, KernelKind kind, cplx v, int m) {
    if (m < 0) throw error(errc::internal, "negative derivative order");
    if (m > tol::order_cap) throw error(errc::internal, "order cap exceeded");
    if (std::abs(v) >= 1.0) throw error(errc::invalid_domain, "kernel parameter outside the open disc");

    const bool conj_side = (kind == KernelKind::szego || kind == KernelKind::bergman);
    const bool half_power = (kind == KernelKind::szego || kind == KernelKind::garabedian);

    // Parameter derivatives act through t: t = conj(v) with F = conj-coefficient
    // f' for the anti-holomorphic kernels, t = v with F = f' otherwise. Then
    // d/d(a-bar) and d/da both become (1/F(t)) d/dt.
    const cplx t0 = conj_side ? std::conj(v) : v;
    const RationalFn F = conj_side
                             ? RationalFn(dom.map_derivative().numer().conj_coeffs(),
                                          dom.map_derivative().denom().conj_coeffs())
                             : dom.map_derivative();

    Jet F_jet = F.taylor(t0, m);

    // Disc kernel jets in the parameter direction, coefficients rational in w.
    RatJet K;
    K.c.resize(m + 1);
    const Poly w = Poly::variable();
    if (kind == KernelKind::szego) {
        // d^k/dt^k [1/(2pi(1-wt))] / k! = w^k / (2pi (1-w t0)^{k+1})
        Poly base(std::vector<cplx>{1.0, -t0});  // 1 - t0 w
        Poly den = Poly::one();
        Poly wk = Poly::one();
        for (int k = 0; k <= m; ++k) {
            den = den * base;
            K.c[k] = RationalFn(wk * cplx(1.0 / (2.0 * pi)), den);
            wk = wk * w;
        }
    } else if (kind == KernelKind::garabedian) {
        // d^k/dt^k [1/(2pi(w-t))] / k! = 1 / (2pi (w-t0)^{k+1})
        Poly base(std::vector<cplx>{-t0, 1.0});  // w - t0
        Poly den = Poly::one();
        for (int k = 0; k <= m; ++k) {
            den = den * base;
            K.c[k] = RationalFn(Poly::constant(1.0 / (2.0 * pi)), den);
        }
    } else if (kind == KernelKind::bergman) {
        // d^k/dt^k [1/(pi(1-wt)^2)] / k! = (k+1) w^k / (pi (1-w t0)^{k+2})
        Poly base(std::vector<cplx>{1.0, -t0});
        Poly den = base;
        Poly wk = Poly::one();
        for (int k = 0; k <= m; ++k) {
            den = den * base;
            K.c[k] = RationalFn(wk * cplx(double(k + 1) / pi), den);
            wk = wk * w;
        }
    } else {
        // d^k/dt^k [1/(pi(w-t)^2)] / k! = (k+1) / (pi (w-t0)^{k+2})
        Poly base(std::vector<cplx>{-t0, 1.0});
        Poly den = base;
        for (int k = 0; k <= m; ++k) {
            den = den * base;
            K.c[k] = RationalFn(Poly::constant(double(k + 1) / pi), den);
        }
    }

    // Parameter-side scale factor: F^{-1/2} with the branch tied to the
    // continuous sqrt of f' at v, or F^{-1} for the full-power kernels.
    Jet s_jet;
    if (half_power) {
        cplx gv = dom.fprime_sqrt(v);
        cplx value0 = conj_side ? std::conj(gv) : gv;
        s_jet = jet_recip(jet_sqrt(F_jet, m, value0), m);
    } else {
        s_jet = jet_recip(F_jet, m);
    }

    RatJet J = ratjet_scale(K, s_jet, m);
    // Apply (1/F) d/dt m times; after the last application only the constant
    // jet coefficient is needed.
    Jet beta = jet_recip(F_jet, m);
    for (int k = 0; k < m; ++k) {
        J = ratjet_diff(J);
        J = ratjet_scale(J, beta, m - 1 - k);
    }

    KernelElement e;
    e.kind = kind;
    e.order = m;
    e.param = v;
    e.reduced = J.c.empty() ? RationalFn() : J.c[0];
    e.power = half_power ? -0.5 : -1.0;
    return e;
}

cplx eval_element(const KernelElement& e, const QuadDomain& dom, cplx w) {
    cplx den = dom.map_derivative()(w);
    cplx val = e.reduced(w);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
        throw error(errc::singular_data, "evaluation at pole");
    if (e.power == -1.0) return val / den;
    return val / dom.fprime_sqrt(w);
}

cplx SpanElement::eval(const QuadDomain& dom, cplx w) const {
    cplx acc = 0.0;
    for (const auto& t : terms) acc += t.coefficient * eval_element(t.element, dom, w);
    return acc;
}

RationalFn SpanElement::reduced_sum() const {
    RationalFn acc;
    for (const auto& t : terms) acc += t.element.reduced * t.coefficient;
    return acc;
}

void SpanElement::sort_canonical() {
    std::sort(terms.begin(), terms.end(), [](const SpanTerm& a, const SpanTerm& b) {
        const auto& pa = a.element.param;
        const auto& pb = b.element.param;
        if (pa.real() != pb.real()) return pa.real() < pb.real();
        if (pa.imag() != pb.imag()) return pa.imag() < pb.imag();
        return a.element.order < b.element.order;
    });
    std::vector<SpanTerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().element.kind == t.element.kind &&
            merged.back().element.order == t.element.order &&
            std::abs(merged.back().element.param - t.element.param) <= tol::cluster) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms = std::move(merged);
}

double identity_residual(const QuadDomain& dom, KernelIdentity which, cplx v, int m,
                         int samples) {
    if (std::abs(v) >= 1.0) throw error(errc::invalid_domain, "kernel parameter outside the open disc");
    const bool sl = (which == KernelIdentity::SL || which == KernelIdentity::SL2);
    KernelElement lhs = kernel_element(dom, sl ? KernelKind::szego : KernelKind::bergman, v, m);
    KernelElement rhs = kernel_element(dom, sl ? KernelKind::garabedian : KernelKind::lambda, v, m);

    const cplx i_unit(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        double theta = 2.0 * std::numbers::pi * k / samples;
        auto fr = dom.frame(theta);
        cplx resid;
        if (sl) {
            cplx sval = eval_element(lhs, dom, fr.w);
            cplx lval = eval_element(rhs, dom, fr.w);
            resid = std::conj(sval) - (1.0 / i_unit) * lval * fr.tangent;
        } else {
            cplx bval = eval_element(lhs, dom, fr.w);
            cplx lam = eval_element(rhs, dom, fr.w);
            resid = bval * fr.tangent + std::conj(lam * fr.tangent);
        }
        worst = std::max(worst, std::abs(resid));
    }
    return worst;
}

}  // namespace qdpot
