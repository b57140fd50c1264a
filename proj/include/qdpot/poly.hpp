#ifndef QDPOT_POLY_HPP
#define QDPOT_POLY_HPP

#include <utility>
#include <vector>

#include "qdpot/error.hpp"

namespace qdpot {

/// Univariate complex polynomial, coefficients ascending by degree.
/// Canonical form: trailing (near-)zero coefficients are trimmed, so the
/// leading coefficient is nonzero unless the polynomial is identically zero
/// (empty coefficient vector, degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return constant(1.0); }
    static Poly constant(cplx value);
    static Poly variable();  // w

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    cplx lead() const { return c_.empty() ? cplx(0.0) : c_.back(); }
    const std::vector<cplx>& coeffs() const { return c_; }
    cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : cplx(0.0);
    }
    double scale() const;  // max |coefficient|, 0 for the zero polynomial

    cplx operator()(cplx w) const;  // Horner
    Poly derivative() const;
    Poly conj_coeffs() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, cplx s);
    friend Poly operator*(cplx s, const Poly& a) { return a * s; }

    // Quotient and remainder of long division; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    // Synthetic division by (w - root); remainder is dropped.
    Poly deflate(cplx root) const;

    // Taylor coefficients about `at`, orders 0..order.
    std::vector<cplx> taylor(cplx at, int order) const;

    // Drops trailing coefficients below tol::trim relative to the largest.
    void trim();

private:
    std::vector<cplx> c_;
};

}  // namespace qdpot

#endif
