#ifndef QDPOT_IO_HPP
#define QDPOT_IO_HPP

#include <optional>
#include <string>

#include "qdpot/decompose.hpp"
#include "qdpot/solvers.hpp"

namespace qdpot {
namespace io {

struct DomainFile {
    std::string name;
    RationalFn map;
    std::optional<RationalFn> witness;
};

/// Domain file: JSON object with `name`, `map_numer`, `map_denom` (arrays of
/// [re, im] pairs, ascending degree) and optional `double_witness_numer` /
/// `double_witness_denom`. Parse errors cite field and index.
DomainFile load_domain_file(const std::string& path);
DomainFile parse_domain_json(const std::string& text);

/// Boundary-function file: JSON object with `numer_coeffs`, `denom_coeffs`
/// as nested arrays c[i][j] of [re, im]; entry (i, j) multiplies z^i zbar^j.
BiRational load_boundary_file(const std::string& path);
BiRational parse_boundary_json(const std::string& text);

std::string format_complex(cplx v);

/// Boundary CSV: theta, re_z, im_z, re_value, im_value, re_tangent,
/// im_tangent, speed; one row per sample angle, theta ascending.
void write_boundary_csv(const std::string& path, const QuadDomain& dom,
                        const HarmonicRep& rep, int samples);

/// Interior CSV: re_z, im_z, re_u, im_u on a polar grid mapped through f;
/// theta-major, then radius-major.
void write_interior_csv(const std::string& path, const QuadDomain& dom,
                        const HarmonicRep& rep, int ntheta, int nr);

}  // namespace io
}  // namespace qdpot

#endif
