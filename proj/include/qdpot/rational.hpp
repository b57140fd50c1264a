#ifndef QDPOT_RATIONAL_HPP
#define QDPOT_RATIONAL_HPP

#include <utility>
#include <vector>

#include "qdpot/poly.hpp"
#include "qdpot/roots.hpp"

namespace qdpot {

/// Negative-power tail of a Laurent expansion: sum of coeffs[j-1] (w-pole)^-j.
struct PrincipalPart {
    cplx pole = 0.0;
    std::vector<cplx> coeffs;  // coeffs[j-1] multiplies (w - pole)^(-j)

    bool empty() const { return coeffs.empty(); }
    int order() const { return static_cast<int>(coeffs.size()); }
    cplx residue() const { return coeffs.empty() ? cplx(0.0) : coeffs.front(); }
    cplx operator()(cplx w) const;
    class RationalFn to_rational() const;
};

/// Univariate complex rational function in canonical reduced form: numerator
/// and denominator share no root (within tol::cluster), denominator monic.
class RationalFn {
public:
    RationalFn() : num_(), den_(Poly::one()) {}
    RationalFn(Poly num, Poly den);
    explicit RationalFn(Poly num) : RationalFn(std::move(num), Poly::one()) {}

    static RationalFn constant(cplx value) { return RationalFn(Poly::constant(value)); }
    static RationalFn variable() { return RationalFn(Poly::variable()); }

    const Poly& numer() const { return num_; }
    const Poly& denom() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    double scale() const;

    cplx operator()(cplx w) const { return num_(w) / den_(w); }

    RationalFn derivative() const;
    RationalFn compose(const RationalFn& inner) const;
    std::vector<Root> poles() const;
    std::vector<cplx> taylor(cplx at, int order) const;

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, cplx s);
    friend RationalFn operator*(cplx s, const RationalFn& a) { return a * s; }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

private:
    void canonicalize();
    Poly num_, den_;
};

/// g with g(w) = conj(f(1/conj(w))) as a rational identity; on |w| = 1 this
/// is the pointwise conjugate of f.
RationalFn reflect(const RationalFn& f);

/// Principal part of f at p. Empty if p is not a pole; throws if p sits
/// within tol::cluster of two distinct computed pole clusters.
PrincipalPart principal_part_at(const RationalFn& f, cplx p);

struct PartialFractions {
    Poly polynomial;
    std::vector<PrincipalPart> parts;
};
PartialFractions partial_fractions(const RationalFn& f);

struct CircleSplit {
    RationalFn inner;  // poles strictly outside the closed unit disc (+ polynomial part)
    RationalFn outer;  // poles strictly inside the open unit disc, vanishing at infinity
};
/// Additive split across the unit circle. Rejects poles within tol::circle
/// of |w| = 1 ("boundary pole").
CircleSplit circle_split(const RationalFn& f);

/// Integral of f along a path in the closed unit disc from basepoint to
/// endpoint, evaluated through the closed-form antiderivative. Requires all
/// poles inside the open disc to be residue-free (path independence);
/// exterior simple poles contribute single-valued logarithm terms.
cplx antiderivative_eval(const RationalFn& f, cplx endpoint, cplx basepoint);

}  // namespace qdpot

#endif
