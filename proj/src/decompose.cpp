#include "qdpot/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdpot {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
cplx unit(double theta) { return cplx(std::cos(theta), std::sin(theta)); }
}  // namespace

BiRational::BiRational(CoeffMatrix numer, CoeffMatrix denom)
    : numer_(std::move(numer)), denom_(std::move(denom)) {
    bool denom_zero = true;
    for (const auto& row : denom_)
        for (const auto& c : row)
            if (c != cplx(0.0)) denom_zero = false;
    if (denom_.empty() || denom_zero)
        throw error(errc::parse, "boundary data denominator is identically zero");
}

BiRational BiRational::constant(cplx value) {
    return BiRational({{value}}, {{cplx(1.0)}});
}

cplx BiRational::eval_matrix(const CoeffMatrix& m, cplx z, cplx s) {
    cplx acc = 0.0;
    cplx zp = 1.0;
    for (const auto& row : m) {
        cplx sp = 1.0;
        cplx rowacc = 0.0;
        for (const auto& c : row) {
            rowacc += c * sp;
            sp *= s;
        }
        acc += zp * rowacc;
        zp *= z;
    }
    return acc;
}

cplx BiRational::operator()(cplx z, cplx s) const {
    return eval_matrix(numer_, z, s) / eval_matrix(denom_, z, s);
}

namespace {

RationalFn pullback_matrix(const BiRational::CoeffMatrix& m, const std::vector<RationalFn>& fpow,
                           const std::vector<RationalFn>& spow) {
    RationalFn acc;
    for (std::size_t i = 0; i < m.size(); ++i) {
        RationalFn row;
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (m[i][j] == cplx(0.0)) continue;
            row += spow[j] * m[i][j];
        }
        if (!row.is_zero()) acc += fpow[i] * row;
    }
    return acc;
}

}  // namespace

RationalFn pullback_boundary_data(const QuadDomain& dom, const BiRational& R) {
    std::size_t zi = std::max(R.numer().size(), R.denom().size());
    std::size_t sj = 1;
    for (const auto& row : R.numer()) sj = std::max(sj, row.size());
    for (const auto& row : R.denom()) sj = std::max(sj, row.size());

    std::vector<RationalFn> fpow{RationalFn::constant(1.0)};
    for (std::size_t i = 1; i < zi; ++i) fpow.push_back(fpow.back() * dom.map());
    std::vector<RationalFn> spow{RationalFn::constant(1.0)};
    for (std::size_t j = 1; j < sj; ++j) spow.push_back(spow.back() * dom.schwarz_pullback());

    RationalFn num = pullback_matrix(R.numer(), fpow, spow);
    RationalFn den = pullback_matrix(R.denom(), fpow, spow);
    if (den.is_zero())
        throw error(errc::singular_data, "singular boundary data (denominator vanishes identically on the boundary)");
    RationalFn rho = num / den;
    for (const auto& p : rho.poles()) {
        if (std::abs(std::abs(p.location) - 1.0) <= tol::circle)
            throw error(errc::singular_data, "singular boundary data");
    }
    return rho;
}

namespace detail {

std::vector<MatchTerm> match_interior_parts(const QuadDomain& dom, KernelKind family,
                                            const RationalFn& g, const char* residue_error,
                                            bool reverse_order) {
    std::vector<MatchTerm> out;
    if (g.is_zero() || g.is_polynomial()) return out;
    const int low = (family == KernelKind::lambda) ? 2 : 1;  // lowest matchable pole order
    const double gscale = std::max(1.0, g.scale());

    auto poles = g.poles();
    if (reverse_order) std::reverse(poles.begin(), poles.end());
    for (const auto& pole : poles) {
        if (std::abs(pole.location) >= 1.0) continue;
        auto pp = principal_part_at(g, pole.location);
        if (pp.empty()) continue;
        const int K = pp.order();
        if (family == KernelKind::lambda && std::abs(pp.residue()) > 1e-9 * gscale)
            throw error(errc::incompatible_data, residue_error);
        if (K - low + 1 > tol::order_cap + 1)
            throw error(errc::internal, "order cap exceeded");

        // Elements E_m, m = 0..K-low, with top pole order m+low; their
        // principal parts at the pole give a lower-triangular system.
        const int nelem = K - low + 1;
        if (nelem <= 0) continue;
        std::vector<KernelElement> elems;
        std::vector<PrincipalPart> epp;
        for (int m = 0; m < nelem; ++m) {
            elems.push_back(kernel_element(dom, family, pole.location, m));
            epp.push_back(principal_part_at(elems.back().reduced, pole.location));
        }
        std::vector<cplx> x(nelem, 0.0);
        for (int j = K; j >= low; --j) {
            const int m = j - low;  // element whose top order is j
            cplx rhs = pp.coeffs[j - 1];
            for (int mp = m + 1; mp < nelem; ++mp) {
                if (j <= epp[mp].order()) rhs -= x[mp] * epp[mp].coeffs[j - 1];
            }
            cplx top = (j <= epp[m].order()) ? epp[m].coeffs[j - 1] : cplx(0.0);
            if (std::abs(top) == 0.0)
                throw error(errc::internal, "degenerate principal-part system");
            x[m] = rhs / top;
        }
        // Leftover order-1 coefficient for the Lambda family was checked to be
        // a numerical zero above.
        double xmax = 0.0;
        for (const auto& v : x) xmax = std::max(xmax, std::abs(v));
        for (int m = 0; m < nelem; ++m) {
            if (std::abs(x[m]) > 1e-14 * xmax)
                out.push_back({pole.location, m, x[m]});
        }
    }
    return out;
}

}  // namespace detail

Decomposition decompose_trace(const QuadDomain& dom, cplx a_param, const RationalFn& rho,
                              const DecompOptions& opts) {
    if (std::abs(a_param) >= 1.0)
        throw error(errc::invalid_domain, "anchor outside the open disc");

    Decomposition d;
    d.anchor = a_param;

    KernelElement sa = kernel_element(dom, KernelKind::szego, a_param, 0);
    KernelElement la = kernel_element(dom, KernelKind::garabedian, a_param, 0);

    // Interior principal parts of the meromorphic extension of S_a rho give
    // the Garabedian coefficients directly.
    RationalFn ghat = sa.reduced * rho;
    for (const auto& t :
         detail::match_interior_parts(dom, KernelKind::garabedian, ghat,
                                      "unexpected residue", opts.reverse_pole_order)) {
        d.garabedian_terms.terms.push_back(
            {t.coeff, kernel_element(dom, KernelKind::garabedian, t.param, t.order)});
    }

    // Reflected route: interior parts of L_a reflect(rho) carry the
    // conjugated Szego coefficients.
    RationalFn ghat2 = la.reduced * reflect(rho);
    for (const auto& t :
         detail::match_interior_parts(dom, KernelKind::garabedian, ghat2,
                                      "unexpected residue", opts.reverse_pole_order)) {
        d.szego_terms.terms.push_back(
            {std::conj(t.coeff), kernel_element(dom, KernelKind::szego, t.param, t.order)});
    }

    d.szego_terms.sort_canonical();
    d.garabedian_terms.sort_canonical();

    // Boundary residual of the decomposition identity.
    double sup = 0.0, worst = 0.0;
    for (int k = 0; k < opts.samples; ++k) {
        cplx w = unit(two_pi * k / opts.samples);
        cplx lhs = eval_element(sa, dom, w) * rho(w);
        cplx rhs = d.szego_terms.eval(dom, w) + d.garabedian_terms.eval(dom, w);
        sup = std::max(sup, std::abs(lhs));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    d.residual = worst;
    if (worst > opts.residual_tol * (1.0 + sup))
        throw error(errc::residual, "decomposition failed (residual " + std::to_string(worst) + ")");
    return d;
}

Decomposition basic_decomposition(const QuadDomain& dom, cplx a_param, const BiRational& R,
                                  const DecompOptions& opts) {
    return decompose_trace(dom, a_param, pullback_boundary_data(dom, R), opts);
}

SpanElement szego_project(const QuadDomain& dom, cplx a_param, const BiRational& R,
                          const DecompOptions& opts) {
    return basic_decomposition(dom, a_param, R, opts).szego_terms;
}

SpanElement szego_project_direct(const QuadDomain& dom, cplx a_param, const BiRational& R,
                                 const DecompOptions& opts) {
    if (!dom.is_double())
        throw error(errc::invalid_domain, "not a double quadrature domain");
    RationalFn rho = pullback_boundary_data(dom, R);
    KernelElement sa = kernel_element(dom, KernelKind::szego, a_param, 0);
    // S_a has the rational boundary trace reduced / q; dividing the data by
    // it re-expresses R as S_a * R2.
    RationalFn rho2 = rho * dom.signed_witness() / sa.reduced;
    return decompose_trace(dom, a_param, rho2, opts).szego_terms;
}

}  // namespace qdpot
