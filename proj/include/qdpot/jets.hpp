#ifndef QDPOT_JETS_HPP
#define QDPOT_JETS_HPP

#include <vector>

#include "qdpot/error.hpp"

namespace qdpot {

// Truncated Taylor jets (coefficient vectors in powers of (t - t0)).
using Jet = std::vector<cplx>;

inline Jet jet_mul(const Jet& a, const Jet& b, int order) {
    Jet r(order + 1, 0.0);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline Jet jet_recip(const Jet& a, int order) {
    if (a.empty() || a[0] == cplx(0.0))
        throw error(errc::internal, "jet reciprocal of jet vanishing at base point");
    Jet r(order + 1, 0.0);
    r[0] = 1.0 / a[0];
    for (int k = 1; k <= order; ++k) {
        cplx s = 0.0;
        for (int i = 1; i <= k; ++i)
            s += (i < static_cast<int>(a.size()) ? a[i] : cplx(0.0)) * r[k - i];
        r[k] = -s / a[0];
    }
    return r;
}

// Square-root jet with the branch pinned by value0 (value0^2 == a[0]).
inline Jet jet_sqrt(const Jet& a, int order, cplx value0) {
    Jet r(order + 1, 0.0);
    r[0] = value0;
    for (int k = 1; k <= order; ++k) {
        cplx s = 0.0;
        for (int i = 1; i < k; ++i) s += r[i] * r[k - i];
        cplx ak = (k < static_cast<int>(a.size()) ? a[k] : cplx(0.0));
        r[k] = (ak - s) / (2.0 * r[0]);
    }
    return r;
}

// d/dt of a jet (loses the top coefficient).
inline Jet jet_diff(const Jet& a) {
    if (a.size() <= 1) return Jet{};
    Jet r(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = double(k) * a[k];
    return r;
}

inline Jet jet_div(const Jet& a, const Jet& b, int order) {
    return jet_mul(a, jet_recip(b, order), order);
}

}  // namespace qdpot

#endif
