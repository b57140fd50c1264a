#ifndef QDPOT_VERIFY_HPP
#define QDPOT_VERIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "qdpot/oracle.hpp"
#include "qdpot/solvers.hpp"

namespace qdpot {
namespace verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;  // measured residual / error
    double bound = 0.0;  // gate it was held against
};

struct Options {
    int samples = 256;
    int fixtures = 10;
    unsigned seed = 20260810;
};

/// Full invariant suite for one domain: boundary geometry, kernel identities,
/// reproducing properties, decomposition residuals, solver cross-checks
/// against the numeric oracles, and the double-quadrature round trips when a
/// witness is present.
std::vector<CheckResult> run_all(const QuadDomain& dom, const Options& opts = {});

/// Random rational boundary data: coefficient magnitudes <= 2, z/s degrees
/// <= 3, denominator factors kept away from the boundary curve so the trace
/// is nonsingular.
BiRational random_birational(std::mt19937& rng, const QuadDomain& dom);

/// Random rational function analytic on the closed unit disc (poles at
/// modulus >= 1.5).
RationalFn random_analytic_on_closed_disc(std::mt19937& rng, int deg, double mag);

/// A boundary trace in the image of the D-to-N map (mean zero by
/// construction); requires a double quadrature domain.
RationalFn random_dtn_image_trace(std::mt19937& rng, const QuadDomain& dom);

}  // namespace verify
}  // namespace qdpot

#endif
