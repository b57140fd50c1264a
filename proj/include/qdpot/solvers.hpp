#ifndef QDPOT_SOLVERS_HPP
#define QDPOT_SOLVERS_HPP

#include <functional>
#include <optional>
#include <string>

#include "qdpot/decompose.hpp"

namespace qdpot {

/// Closed-form harmonic function u = h + conj(H), held as the rational
/// pullbacks h_hat = h o f and H_hat = H o f, both analytic on the closed
/// disc (all poles strictly outside).
struct HarmonicRep {
    RationalFn h_hat;
    RationalFn H_hat;
    cplx anchor;  // Szego anchor used in the construction (when applicable)
    std::string provenance;

    /// Boundary value h + conj(H) at w = e^{i theta}.
    cplx boundary_value(cplx w) const { return h_hat(w) + std::conj(H_hat(w)); }
};

/// u at the disc parameter v, |v| < 1.
cplx harmonic_eval(const HarmonicRep& rep, const QuadDomain& dom, cplx v);

/// Dirichlet solution with rational boundary data, read off the basic
/// decomposition: h = sigma_1 / S_a and H = sigma_2 / L_a with sigma_j in the
/// Szego span; all square-root derivative factors cancel in the quotients.
HarmonicRep dirichlet_solve(const QuadDomain& dom, cplx a_param, const BiRational& R,
                            const DecompOptions& opts = {});

/// Dirichlet-to-Neumann output: the normal derivative as a function of the
/// boundary angle, plus its exact rational trace in w on double quadrature
/// domains.
struct DtnResult {
    std::function<cplx(double)> normal_derivative;
    std::optional<RationalFn> rational_trace;
};

DtnResult dtn_map(const QuadDomain& dom, const HarmonicRep& rep);
DtnResult dtn_map(const QuadDomain& dom, cplx a_param, const BiRational& R,
                  const DecompOptions& opts = {});

/// The unique representation psi = kappa_1 T + conj(kappa_2 T) with both
/// kappas analytic on the closed disc, via the Riemann-Hilbert circle split
/// of Theta = -i psi q reflect(q).
struct SplitPair {
    RationalFn kappa1_hat;
    RationalFn kappa2_hat;
};

SplitPair tangential_split(const QuadDomain& dom, const RationalFn& psi);

/// One-sided inverse of the D-to-N map: boundary data h + conj(H) whose
/// normal derivative is psi, gauge-pinned by h(f(0)) = H(f(0)) = 0.
HarmonicRep dtn_inverse(const QuadDomain& dom, const RationalFn& psi);

/// Neumann solution with rational boundary trace psi, mean-zero required.
HarmonicRep neumann_solve(const QuadDomain& dom, const RationalFn& psi);

/// r = kappa + lambda with kappa in the Bergman span and lambda in the
/// Lambda span; input in 1-form pullback (r o f) f', which makes both sides
/// plain rational functions of w.
struct BergmanDecomposition {
    SpanElement kappa;
    SpanElement lambda;
};

BergmanDecomposition bergman_decompose(const QuadDomain& dom, const RationalFn& r_pullback);

/// Conjugates every coefficient and swaps Bergman <-> Lambda at the same
/// (param, order); the result G satisfies g T = -conj(G T) on the boundary.
SpanElement complementary_function(const SpanElement& s);

}  // namespace qdpot

#endif
