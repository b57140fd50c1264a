#ifndef QDPOT_DOMAIN_HPP
#define QDPOT_DOMAIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "qdpot/rational.hpp"

namespace qdpot {

/// One point of the boundary parameterization z = f(e^{i theta}).
struct BoundaryFrame {
    double theta = 0.0;
    cplx w;        // e^{i theta}
    cplx z;        // f(w)
    cplx tangent;  // unit tangent T(z), counterclockwise
    double speed = 0.0;  // |f'(w)|, arc-length density ds/dtheta
};

struct QuadratureNode {
    cplx point;        // a_k in the domain
    int order = 0;     // derivative order m
    cplx coefficient;  // c_km
};

struct QuadratureData {
    std::vector<QuadratureNode> nodes;
};

/// Simply connected area quadrature domain, encoded by a rational map f of
/// the unit disc, analytic and univalent on the closure, with f' nonvanishing
/// there (no cusps). An optional witness q with q^2 = f' marks the domain as
/// a double quadrature domain (arc-length quadrature as well).
class QuadDomain {
public:
    /// Validates everything: pole locations of f, nonvanishing f' on the
    /// closed disc, univalence (winding count around interior probes plus a
    /// boundary self-intersection scan), and the witness identity if given.
    static QuadDomain make(RationalFn f, std::optional<RationalFn> q = std::nullopt);

    const RationalFn& map() const { return f_; }
    const RationalFn& map_derivative() const { return fp_; }
    const RationalFn& schwarz_pullback() const { return sigma_; }
    const std::optional<RationalFn>& double_witness() const { return q_; }
    bool is_double() const { return q_.has_value(); }

    /// Witness aligned with the continuous branch of sqrt(f'), so that
    /// signed_witness(w) == fprime_sqrt(w) everywhere on the closed disc.
    RationalFn signed_witness() const;

    /// Heuristic report: true when every zero and pole of f' has even
    /// multiplicity, which is necessary for a rational square root to exist.
    bool even_multiplicity_hint() const { return even_hint_; }

    BoundaryFrame frame(double theta) const;
    QuadratureData quadrature_data() const;

    /// Disc parameter v with f(v) = z, |v| < 1. Newton from a polar-grid
    /// seed; throws "point not in domain" when no interior preimage exists.
    cplx invert(cplx z) const;

    /// Continuous branch of sqrt(f'(w)) on the closed disc, principal at 0.
    cplx fprime_sqrt(cplx w) const;

    /// max |f| over the boundary; scale for tolerance decisions.
    double boundary_scale() const { return boundary_scale_; }

private:
    QuadDomain() = default;

    RationalFn f_, fp_, sigma_;
    std::optional<RationalFn> q_;
    double witness_sign_ = 1.0;  // q * sign matches the continuous sqrt branch
    bool even_hint_ = false;
    double boundary_scale_ = 1.0;
    std::vector<cplx> seed_points_;  // polar grid in the disc
    std::vector<cplx> seed_values_;  // f(seed)
};

}  // namespace qdpot

#endif
