#ifndef JACSPEC_POLYNOMIALS_HPP
#define JACSPEC_POLYNOMIALS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "jacspec/coefficients.hpp"
#include "jacspec/scaling.hpp"

namespace jacspec {

/// Values of the first- and second-kind polynomials at one point, stored as
/// mantissa/exponent pairs: true value = p[k] * 2^p_exp[k]. Both families
/// run through
///   b_{k-1} y_{k-1} + a_k y_k + b_k y_{k+1} = point * y_k
/// from P_0 = 1, P_1 = (point - a_0)/b_0, Q_0 = 0, Q_1 = 1/b_0, with binary
/// rescaling so the stored mantissas never leave the policy window.
template <class Scalar>
struct PolyTable {
  std::size_t degree = 0;
  Scalar point{};
  std::vector<Scalar> p, q;                // scaled mantissas, size degree+1
  std::vector<std::int64_t> p_exp, q_exp;  // per-entry binary exponents
  bool rescaled = false;                   // true if any shift was applied

  /// Unscaled value; overflows to inf / underflows to 0 when the true
  /// magnitude leaves the double range.
  Scalar p_value(std::size_t k) const;
  Scalar q_value(std::size_t k) const;
};

extern template struct PolyTable<double>;
extern template struct PolyTable<std::complex<double>>;

template <class Scalar>
PolyTable<Scalar> eval_pq(const CoefficientSequence& seq, std::size_t n,
                          Scalar point, ScalingPolicy policy = {});

extern template PolyTable<double> eval_pq(const CoefficientSequence&, std::size_t,
                                          double, ScalingPolicy);
extern template PolyTable<std::complex<double>> eval_pq(const CoefficientSequence&,
                                                        std::size_t,
                                                        std::complex<double>,
                                                        ScalingPolicy);

/// Relative defect of P_{n-1} Q_n - P_n Q_{n-1} = 1/b_{n-1}, n >= 1.
///
/// This is a numerical health probe, not an identity that double precision
/// can certify everywhere: once the polynomials grow to |P Q| >> 1/(b eps)
/// (real points far off the band, complex points far from it) the
/// subtraction has no significant bits left and the returned residual is
/// large by construction. Small residuals are meaningful; large ones flag
/// the breakdown region.
template <class Scalar>
double wronskian_residual(const CoefficientSequence& seq, std::size_t n,
                          Scalar point);

extern template double wronskian_residual(const CoefficientSequence&, std::size_t,
                                          double);
extern template double wronskian_residual(const CoefficientSequence&, std::size_t,
                                          std::complex<double>);

/// g_n(x) = P_n^2 - (b_{n-1}/b_n) P_{n-1} P_{n+1}, n >= 1 (fma-compensated).
double turan_determinant(const CoefficientSequence& seq, std::size_t n, double x);

/// Same quantity as a cumulative sum,
///   g_n = (1/b_n^2) sum_{k<=n} [(b_k^2-b_{k-1}^2) P_k^2
///                               + b_{k-1}(a_k-a_{k-1}) P_{k-1} P_k],
/// with b_{-1} = 0, P_{-1} = 0. For nondecreasing b and constant a the
/// terms share a sign, which keeps this form conditioned where the
/// determinant form cancels. Defined for n >= 0 (g_0 = 1).
double turan_sum(const CoefficientSequence& seq, std::size_t n, double x);

/// Third route to the same denominator:
///   P_{n+1}^2 + P_n^2 - ((x - a_n)/b_n) P_{n+1} P_n, n >= 1.
double alt_denominator(const CoefficientSequence& seq, std::size_t n, double x);

namespace detail {

/// Streaming evaluator for first-kind polynomials at a real point. After
/// construction the walker sits at k = 1; each advance() moves one index.
/// Scaled mantissas of the active triple share one exponent, so ratios and
/// local combinations of adjacent values need no unscaling.
class RealPolyWalker {
 public:
  RealPolyWalker(const CoefficientSequence& seq, double x,
                 ScalingPolicy policy = {});

  /// Index of the leading computed entry (P_curr = P_k).
  std::size_t index() const noexcept { return k_; }
  void advance();

  double p_prev() const noexcept { return prev_; }   // P_{k-1} mantissa
  double p_curr() const noexcept { return curr_; }   // P_k mantissa
  std::int64_t exponent() const noexcept { return exp_; }

 private:
  const CoefficientSequence& seq_;
  double x_;
  ScalingPolicy policy_;
  std::size_t k_;
  double prev_, curr_;
  std::int64_t exp_ = 0;
};

}  // namespace detail

}  // namespace jacspec

#endif
