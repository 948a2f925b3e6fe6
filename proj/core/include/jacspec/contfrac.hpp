#ifndef JACSPEC_CONTFRAC_HPP
#define JACSPEC_CONTFRAC_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "jacspec/coefficients.hpp"

namespace jacspec {

using Complex = std::complex<double>;

enum class Guarantee { PringsheimBound, CauchyEmpirical, ClosedForm, None };

const char* to_string(Guarantee g) noexcept;

/// Outcome of an iterative limit. `converged` implies the last step size
/// (residual) met the requested tolerance.
struct ConvergenceCertificate {
  bool converged = false;
  std::size_t iterations = 0;
  double residual = 0.0;
  Guarantee guarantee = Guarantee::None;
};

/// n-th continued-fraction approximant -Q_n/P_n, n >= 1.
/// Throws PoleError when P_n(lambda) vanishes.
Complex resolvent_approximant(const CoefficientSequence& seq, std::size_t n,
                              Complex lambda);

struct ResolventResult {
  Complex value{};
  ConvergenceCertificate certificate{};
};

/// Iterates approximants until the step size stays below tol for `window`
/// consecutive indices (empirical Cauchy stabilization) or n_max is hit.
/// Requires Im(lambda) != 0. On non-convergence the certificate reports
/// converged = false and the value is the last approximant.
ResolventResult resolvent_limit(const CoefficientSequence& seq, Complex lambda,
                                double tol = 1e-10, std::size_t n_max = 20000,
                                std::size_t window = 5);

/// Resolvent element of the constant Jacobi operator with diagonal a and
/// off-diagonal b: the root of b^2 K^2 + (lambda - a) K + 1 = 0 on the
/// Herglotz branch (Im K > 0 for Im lambda > 0, conjugate below the axis).
/// Real lambda is accepted off the closed band [a-2b, a+2b] only, where the
/// bounded root |K| <= 1/b is returned; inside the band use boundary_values.
Complex constant_tail_resolvent(double a, double b, Complex lambda);

/// Boundary values of the constant-tail resolvent on the real axis:
/// K(x + i0) = d + i*bv.
struct BoundaryValues {
  double d = 0.0;   // real part, piecewise with the off-band sign rule
  double bv = 0.0;  // imaginary part, 0 off the band
};

BoundaryValues boundary_values(double a, double b, double x);

/// Trace of the equivalent-transform series evaluation: the transformed
/// elements C_k, the log-magnitudes of the denominators N_k, the unit
/// increments |N_k| - |N_{k-1}|, and the running partial sums.
struct TailSeriesState {
  std::vector<Complex> c;
  std::vector<double> n_log2;        // log2 |N_k| (unscaled)
  std::vector<double> n_increments;  // |N_k| - |N_{k-1}|, +inf if beyond double
  std::vector<Complex> partial_sums;
  bool all_c_below_one = true;
};

struct TailSeriesResult {
  Complex value{};
  ConvergenceCertificate certificate{};
  TailSeriesState state{};
};

/// Evaluates the tail function K_n(lambda) through the equivalent continued
/// fraction with elements C_0 = 2/(a_n - lambda),
/// C_k = -4 b_{n+k-1}^2 / ((a_{n+k-1} - lambda)(a_{n+k} - lambda)).
/// While every |C_k| < 1 the denominators satisfy |N_k| - |N_{k-1}| >= 1 and
/// every partial sum is bounded by 1 in modulus; the certificate then
/// carries the Pringsheim guarantee. Otherwise evaluation continues with
/// guarantee = None.
TailSeriesResult tail_series(const CoefficientSequence& seq, std::size_t n,
                             Complex lambda, std::size_t k_max = 10000,
                             double tol = 1e-12);

/// Assembles the full resolvent from a tail value:
///   -(Q_n + Q_{n-1} b_{n-1} K) / (P_n + P_{n-1} b_{n-1} K), n >= 1.
/// With the true tail and Im(lambda) != 0 the result is n-independent.
Complex assemble_tail_resolvent(const CoefficientSequence& seq, std::size_t n,
                                Complex lambda, Complex tail_value);

}  // namespace jacspec

#endif
