#include "qdpot/poly.hpp"

#include <algorithm>
#include <cmath>

namespace qdpot {

Poly Poly::constant(cplx value) {
    if (value == cplx(0.0)) return Poly{};
    return Poly(std::vector<cplx>{value});
}

Poly Poly::variable() { return Poly(std::vector<cplx>{0.0, 1.0}); }

double Poly::scale() const {
    double s = 0.0;
    for (const auto& v : c_) s = std::max(s, std::abs(v));
    return s;
}

cplx Poly::operator()(cplx w) const {
    cplx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly{};
    std::vector<cplx> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::conj_coeffs() const {
    std::vector<cplx> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = std::conj(c_[k]);
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    std::vector<cplx> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = -c_[k];
    return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<cplx> d(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
}

Poly operator*(const Poly& a, cplx s) {
    if (s == cplx(0.0)) return Poly{};
    std::vector<cplx> d(a.c_);
    for (auto& v : d) v *= s;
    return Poly(std::move(d));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw error(errc::internal, "polynomial division by zero");
    if (degree() < divisor.degree()) return {Poly{}, *this};
    std::vector<cplx> rem = c_;
    const int dq = degree() - divisor.degree();
    std::vector<cplx> quot(dq + 1, 0.0);
    const cplx lead = divisor.lead();
    for (int k = dq; k >= 0; --k) {
        cplx q = rem[k + divisor.degree()] / lead;
        quot[k] = q;
        for (int j = 0; j <= divisor.degree(); ++j) rem[k + j] -= q * divisor.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::deflate(cplx root) const {
    if (c_.size() <= 1) return Poly{};
    std::vector<cplx> q(c_.size() - 1);
    cplx carry = c_.back();
    for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k) {
        q[k] = carry;
        carry = c_[k] + root * carry;
    }
    return Poly(std::move(q));
}

std::vector<cplx> Poly::taylor(cplx at, int order) const {
    // Repeated synthetic division: p = (w - at) q + p(at), so the remainders
    // of the deflation chain are exactly the Taylor coefficients.
    std::vector<cplx> out(order + 1, 0.0);
    Poly cur = *this;
    for (int k = 0; k <= order && !cur.is_zero(); ++k) {
        out[k] = cur(at);
        cur = cur.deflate(at);
    }
    return out;
}

void Poly::trim() {
    double s = scale();
    if (s == 0.0) {
        c_.clear();
        return;
    }
    const double cut = tol::trim * s;
    while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
}

}  // namespace qdpot
