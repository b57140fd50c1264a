#ifndef QDPOT_ERROR_HPP
#define QDPOT_ERROR_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdpot {

using cplx = std::complex<double>;

// Error categories; the numeric values double as CLI exit codes.
enum class errc : int {
    internal = 1,
    parse = 2,
    invalid_domain = 3,
    singular_data = 4,
    incompatible_data = 5,
    residual = 6,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }

private:
    errc code_;
};

// Root finding gave up before meeting tolerance; carries the best iterates.
class root_failure : public error {
public:
    root_failure(const std::string& what, std::vector<cplx> best_iterates)
        : error(errc::internal, what), best(std::move(best_iterates)) {}

    std::vector<cplx> best;
};

namespace tol {
// Pinned numeric policy shared across modules.
inline constexpr double root = 1e-12;      // relative backward error for roots
inline constexpr double cluster = 1e-8;    // root clustering / multiplicity merge
inline constexpr double circle = 1e-6;     // exclusion band around |w| = 1
inline constexpr double trim = 1e-13;      // relative coefficient trim
inline constexpr double decomp = 1e-8;     // decomposition residual gate
inline constexpr double solver = 1e-8;     // Dirichlet/split boundary residual gate
inline constexpr double witness = 1e-10;   // q^2 = f' coefficient match
inline constexpr int root_iter_cap = 200;  // Aberth iteration cap
inline constexpr int order_cap = 12;       // kernel parameter-derivative cap
}  // namespace tol

}  // namespace qdpot

#endif
