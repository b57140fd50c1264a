#ifndef QDPOT_DECOMPOSE_HPP
#define QDPOT_DECOMPOSE_HPP

#include <vector>

#include "qdpot/kernels.hpp"

namespace qdpot {

/// Rational function R(z, s) of z and the formal conjugate variable s = z-bar;
/// coefficient c[i][j] multiplies z^i s^j.
class BiRational {
public:
    using CoeffMatrix = std::vector<std::vector<cplx>>;

    BiRational(CoeffMatrix numer, CoeffMatrix denom);
    static BiRational constant(cplx value);

    const CoeffMatrix& numer() const { return numer_; }
    const CoeffMatrix& denom() const { return denom_; }
    cplx operator()(cplx z, cplx s) const;

private:
    static cplx eval_matrix(const CoeffMatrix& m, cplx z, cplx s);
    CoeffMatrix numer_, denom_;
};

/// rho(w) = R(f(w), sigma(w)), the rational boundary trace in the disc
/// parameter; rejects traces with poles on the unit circle.
RationalFn pullback_boundary_data(const QuadDomain& dom, const BiRational& R);

struct Decomposition {
    cplx anchor;                  // disc parameter of the Szego anchor a
    SpanElement szego_terms;      // coefficients A_nm on S^m(., a_n)
    SpanElement garabedian_terms; // coefficients B_nm on L^m(., b_n)
    double residual = 0.0;        // max boundary mismatch of the identity
};

struct DecompOptions {
    double residual_tol = tol::decomp;  // relative gate on the boundary residual
    int samples = 256;
    bool reverse_pole_order = false;  // exercise order independence in tests
};

/// Expands S_a(z) R(z, z-bar) on the boundary into Szego-span plus
/// Garabedian-span terms by principal-part matching.
Decomposition basic_decomposition(const QuadDomain& dom, cplx a_param, const BiRational& R,
                                  const DecompOptions& opts = {});

/// Same, starting from an already pulled-back rational boundary trace.
Decomposition decompose_trace(const QuadDomain& dom, cplx a_param, const RationalFn& rho,
                              const DecompOptions& opts = {});

/// Szego projection of S_a R (the szego_terms of the basic decomposition).
SpanElement szego_project(const QuadDomain& dom, cplx a_param, const BiRational& R,
                          const DecompOptions& opts = {});

/// On a double quadrature domain: the Szego projection of R itself, obtained
/// by dividing by the rational boundary trace of S_a.
SpanElement szego_project_direct(const QuadDomain& dom, cplx a_param, const BiRational& R,
                                 const DecompOptions& opts = {});

namespace detail {

struct MatchTerm {
    cplx param;
    int order = 0;
    cplx coeff;
};

/// Matches every interior principal part of g with reduced Garabedian or
/// Lambda elements (one lower-triangular solve per pole). For the Lambda
/// family, interior residues must vanish; `residue_error` is thrown
/// otherwise.
std::vector<MatchTerm> match_interior_parts(const QuadDomain& dom, KernelKind family,
                                            const RationalFn& g, const char* residue_error,
                                            bool reverse_order = false);

}  // namespace detail

}  // namespace qdpot

#endif
