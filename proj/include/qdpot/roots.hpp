#ifndef QDPOT_ROOTS_HPP
#define QDPOT_ROOTS_HPP

#include <vector>

#include "qdpot/poly.hpp"

namespace qdpot {

struct Root {
    cplx location;
    int multiplicity = 1;
};

/// All roots of p with multiplicities. Aberth-Ehrlich simultaneous iteration
/// with multiplicity-aware Newton polish; iterates within tol::cluster are
/// merged into one root with summed multiplicity. Degree 0 gives an empty
/// sequence. Throws root_failure (carrying the best iterates) if the backward
/// error criterion is not met within tol::root_iter_cap sweeps.
std::vector<Root> poly_roots(const Poly& p);

}  // namespace qdpot

#endif
