#ifndef QDPOT_KERNELS_HPP
#define QDPOT_KERNELS_HPP

#include <vector>

#include "qdpot/domain.hpp"

namespace qdpot {

enum class KernelKind { szego, garabedian, bergman, lambda };

/// One span generator S_a^m, L_a^m, B_a^m or Lambda_a^m, pulled back to the
/// disc: the element value at z = f(w) is reduced(w) * f'(w)^power, with
/// power -1/2 for Szego/Garabedian and -1 for Bergman/Lambda. The parameter
/// point is addressed by its disc coordinate v (a = f(v)).
struct KernelElement {
    KernelKind kind = KernelKind::szego;
    int order = 0;
    cplx param;           // v, |v| < 1
    RationalFn reduced;   // rational part in the disc variable
    double power = -0.5;  // exponent of f'(w)
};

KernelElement kernel_element(const QuadDomain& dom, KernelKind kind, cplx v, int m);

/// reduced(w) * f'(w)^power with the continuous square-root branch.
cplx eval_element(const KernelElement& e, const QuadDomain& dom, cplx w);

struct SpanTerm {
    cplx coefficient;
    KernelElement element;
};

/// Finite linear combination of kernel elements.
struct SpanElement {
    std::vector<SpanTerm> terms;

    cplx eval(const QuadDomain& dom, cplx w) const;
    /// Sum of coefficient * reduced parts (all terms must share `power`).
    RationalFn reduced_sum() const;
    bool empty() const { return terms.empty(); }
    /// Sorts by (param, order) and merges duplicate generators.
    void sort_canonical();
};

enum class KernelIdentity { SL, SL2, BL, BL2 };

/// Max residual over uniform boundary samples of the conjugation identity
/// linking the kernels: |conj(S_a^m) - (1/i) L_a^m T| for SL/SL2, and
/// |B^m T + conj(Lambda^m T)| for BL/BL2.
double identity_residual(const QuadDomain& dom, KernelIdentity which, cplx v, int m,
                         int samples);

}  // namespace qdpot

#endif
