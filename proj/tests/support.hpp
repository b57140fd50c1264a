#ifndef QDPOT_TESTS_SUPPORT_HPP
#define QDPOT_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "qdpot/rational.hpp"

namespace qdtest {

using qdpot::cplx;
using qdpot::Poly;
using qdpot::RationalFn;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline cplx unit(double theta) { return cplx(std::cos(theta), std::sin(theta)); }

inline cplx rand_cplx(std::mt19937& rng, double mag) {
    std::uniform_real_distribution<double> d(-mag, mag);
    return cplx(d(rng), d(rng));
}

/// Random rational with prescribed degrees, poles kept off the unit circle
/// (inside radius <= 0.7 or outside radius >= 1.4).
inline RationalFn random_rational_off_circle(std::mt19937& rng, int num_deg, int npoles_in,
                                             int npoles_out) {
    std::vector<cplx> nc(num_deg + 1);
    for (auto& c : nc) c = rand_cplx(rng, 1.0);
    Poly den = Poly::one();
    std::uniform_real_distribution<double> rin(0.2, 0.7), rout(1.4, 3.0), ang(0.0, two_pi);
    for (int k = 0; k < npoles_in; ++k) {
        cplx p = rin(rng) * unit(ang(rng));
        den = den * Poly(std::vector<cplx>{-p, 1.0});
    }
    for (int k = 0; k < npoles_out; ++k) {
        cplx p = rout(rng) * unit(ang(rng));
        den = den * Poly(std::vector<cplx>{-p, 1.0});
    }
    return RationalFn(Poly(std::move(nc)), std::move(den));
}

inline double circle_max_diff(const RationalFn& a, const RationalFn& b, int samples) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        cplx w = unit(two_pi * k / samples);
        worst = std::max(worst, std::abs(a(w) - b(w)));
    }
    return worst;
}

}  // namespace qdtest

#endif
