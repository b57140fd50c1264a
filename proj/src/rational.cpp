#include "qdpot/rational.hpp"

#include <algorithm>
#include <cmath>

#include "qdpot/jets.hpp"

namespace qdpot {

cplx PrincipalPart::operator()(cplx w) const {
    cplx acc = 0.0;
    cplx inv = 1.0 / (w - pole);
    cplx pw = inv;
    for (const auto& c : coeffs) {
        acc += c * pw;
        pw *= inv;
    }
    return acc;
}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw error(errc::internal, "rational function with zero denominator");
    canonicalize();
}

double RationalFn::scale() const {
    double dn = den_.scale();
    return dn > 0.0 ? num_.scale() / dn : num_.scale();
}

void RationalFn::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (num_.degree() > 0 && den_.degree() > 0) {
        // Common roots detected by mutual evaluation of the two root sets,
        // then divided out by synthetic deflation.
        auto rn = poly_roots(num_);
        auto rd = poly_roots(den_);
        for (auto& pn : rn) {
            for (auto& pd : rd) {
                if (pd.multiplicity == 0 || pn.multiplicity == 0) continue;
                if (std::abs(pn.location - pd.location) <= tol::cluster * (1.0 + std::abs(pd.location))) {
                    int m = std::min(pn.multiplicity, pd.multiplicity);
                    cplx at = 0.5 * (pn.location + pd.location);
                    for (int k = 0; k < m; ++k) {
                        num_ = num_.deflate(at);
                        den_ = den_.deflate(at);
                    }
                    pn.multiplicity -= m;
                    pd.multiplicity -= m;
                }
            }
        }
    }
    // Monic denominator.
    cplx lead = den_.lead();
    num_ = num_ * (1.0 / lead);
    den_ = den_ * (1.0 / lead);
}

RationalFn RationalFn::derivative() const {
    if (is_polynomial()) return RationalFn(num_.derivative());
    Poly n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFn(std::move(n), den_ * den_);
}

RationalFn RationalFn::compose(const RationalFn& inner) const {
    // Horner over the numerator and denominator separately:
    // p(g) = sum c_k g^k with g rational, sharing powers of g.
    auto eval_poly = [&inner](const Poly& p) {
        RationalFn acc = RationalFn::constant(0.0);
        const auto& c = p.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * inner + RationalFn::constant(*it);
        return acc;
    };
    RationalFn n = eval_poly(num_);
    RationalFn d = eval_poly(den_);
    if (d.is_zero()) throw error(errc::singular_data, "composition has identically zero denominator");
    return n / d;
}

std::vector<Root> RationalFn::poles() const {
    if (is_polynomial()) return {};
    return poly_roots(den_);
}

std::vector<cplx> RationalFn::taylor(cplx at, int order) const {
    auto nj = num_.taylor(at, order);
    auto dj = den_.taylor(at, order);
    if (dj[0] == cplx(0.0)) throw error(errc::internal, "taylor expansion at a pole");
    return jet_div(nj, dj, order);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) return a;
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn();
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw error(errc::internal, "zero divisor");
    if (a.is_zero()) return RationalFn();
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn operator*(const RationalFn& a, cplx s) {
    if (s == cplx(0.0)) return RationalFn();
    return RationalFn(a.num_ * s, a.den_);
}

RationalFn reflect(const RationalFn& f) {
    // conj(f(1/conj(w))): conjugate coefficients, substitute w -> 1/w and
    // clear the common power w^n, n = max(deg num, deg den).
    const int n = std::max(f.numer().degree(), f.denom().degree());
    if (n <= 0) return RationalFn::constant(std::conj(f.numer().coeff(0)) / std::conj(f.denom().coeff(0)));
    auto rev = [n](const Poly& p) {
        std::vector<cplx> out(n + 1, 0.0);
        for (int k = 0; k <= n; ++k) out[k] = std::conj(p.coeff(n - k));
        return Poly(std::move(out));
    };
    return RationalFn(rev(f.numer()), rev(f.denom()));
}

PrincipalPart principal_part_at(const RationalFn& f, cplx p) {
    PrincipalPart pp;
    pp.pole = p;
    if (f.is_polynomial() || f.is_zero()) return pp;
    auto pole_list = poly_roots(f.denom());
    const Root* hit = nullptr;
    int hits = 0;
    for (const auto& r : pole_list) {
        if (std::abs(r.location - p) <= tol::cluster * (1.0 + std::abs(p))) {
            hit = &r;
            ++hits;
        }
    }
    if (hits == 0) return pp;
    if (hits > 1) throw error(errc::internal, "ambiguous pole cluster");

    const cplx center = hit->location;
    const int k = hit->multiplicity;
    Poly dtil = f.denom();
    for (int j = 0; j < k; ++j) dtil = dtil.deflate(center);
    // Laurent tail from the Taylor jet of num/dtil about the pole.
    auto nj = f.numer().taylor(center, k - 1);
    auto dj = dtil.taylor(center, k - 1);
    auto qj = jet_div(nj, dj, k - 1);
    pp.pole = center;
    pp.coeffs.assign(k, 0.0);
    for (int j = 1; j <= k; ++j) pp.coeffs[j - 1] = qj[k - j];
    // Exact pole order: drop a vanishing top coefficient (cancellation that
    // survived reduction).
    double s = 0.0;
    for (const auto& c : pp.coeffs) s = std::max(s, std::abs(c));
    while (!pp.coeffs.empty() && std::abs(pp.coeffs.back()) <= tol::trim * s) pp.coeffs.pop_back();
    return pp;
}

RationalFn PrincipalPart::to_rational() const {
    // sum c_j (w-p)^-j = [sum c_j (w-p)^(k-j)] / (w-p)^k
    const int k = order();
    Poly wp = Poly(std::vector<cplx>{-pole, 1.0});
    Poly num = Poly::zero();
    Poly pw = Poly::one();
    // Build from the top: c_k + c_{k-1}(w-p) + ... + c_1 (w-p)^{k-1}
    for (int j = k; j >= 1; --j) {
        num += Poly::constant(coeffs[j - 1]) * pw;
        pw = pw * wp;
    }
    Poly den = Poly::one();
    for (int j = 0; j < k; ++j) den = den * wp;
    return RationalFn(std::move(num), std::move(den));
}

PartialFractions partial_fractions(const RationalFn& f) {
    PartialFractions out;
    auto [q, r] = f.numer().divmod(f.denom());
    out.polynomial = q;
    if (r.is_zero() || f.is_polynomial()) return out;
    RationalFn tail(r, f.denom());
    for (const auto& pole : poly_roots(f.denom())) {
        auto pp = principal_part_at(tail, pole.location);
        if (!pp.empty()) out.parts.push_back(std::move(pp));
    }
    return out;
}

CircleSplit circle_split(const RationalFn& f) {
    CircleSplit out;
    auto pf = partial_fractions(f);
    out.inner = RationalFn(pf.polynomial);
    out.outer = RationalFn();
    for (const auto& pp : pf.parts) {
        double r = std::abs(pp.pole);
        if (std::abs(r - 1.0) <= tol::circle)
            throw error(errc::singular_data, "boundary pole");
        if (r > 1.0)
            out.inner += pp.to_rational();
        else
            out.outer += pp.to_rational();
    }
    return out;
}

cplx antiderivative_eval(const RationalFn& f, cplx endpoint, cplx basepoint) {
    auto pf = partial_fractions(f);
    const double fs = std::max(1.0, f.scale());

    for (const auto& pp : pf.parts) {
        double dist_end = std::abs(endpoint - pp.pole);
        double dist_base = std::abs(basepoint - pp.pole);
        // Distance from the straight path to the pole.
        cplx d = endpoint - basepoint;
        double seg = std::abs(d);
        double dist_seg = std::min(dist_end, dist_base);
        if (seg > 0.0) {
            double t = std::clamp((std::conj(d) * (pp.pole - basepoint)).real() / (seg * seg), 0.0, 1.0);
            dist_seg = std::min(dist_seg, std::abs(basepoint + t * d - pp.pole));
        }
        if (dist_seg <= 1e-12 * (1.0 + std::abs(pp.pole)))
            throw error(errc::singular_data, "path hits pole");
        if (std::abs(pp.pole) < 1.0 && std::abs(pp.residue()) > 1e-9 * fs)
            throw error(errc::incompatible_data, "multivalued antiderivative");
    }

    auto eval_primitive = [&pf](cplx w) {
        cplx acc = 0.0;
        // Polynomial part.
        const auto& c = pf.polynomial.coeffs();
        cplx pw = w;
        for (std::size_t k = 0; k < c.size(); ++k) {
            acc += c[k] * pw / double(k + 1);
            pw *= w;
        }
        for (const auto& pp : pf.parts) {
            cplx inv = 1.0 / (w - pp.pole);
            cplx ppow = 1.0;
            for (int j = 2; j <= pp.order(); ++j) {
                ppow *= inv;
                acc += pp.coeffs[j - 1] * ppow / double(1 - j);
            }
            if (std::abs(pp.pole) >= 1.0 && std::abs(pp.residue()) > 0.0) {
                // log(w - p) = log(-p) + log(1 - w/p); the constant cancels in
                // the difference, and |w/p| < 1 keeps the principal branch
                // single-valued on the disc.
                acc += pp.residue() * std::log(1.0 - w / pp.pole);
            }
        }
        return acc;
    };
    return eval_primitive(endpoint) - eval_primitive(basepoint);
}

}  // namespace qdpot
