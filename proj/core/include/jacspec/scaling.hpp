#ifndef JACSPEC_SCALING_HPP
#define JACSPEC_SCALING_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

namespace jacspec {

/// Binary rescaling thresholds for recurrence kernels. Whenever the active
/// magnitude leaves [2^lo, 2^hi] the working pair is multiplied by an exact
/// power of two and the shift is accumulated in the exponent bookkeeping.
struct ScalingPolicy {
  int hi = 512;
  int lo = -512;
};

namespace detail {

inline double mag(double v) { return std::fabs(v); }
inline double mag(const std::complex<double>& v) {
  return std::fmax(std::fabs(v.real()), std::fabs(v.imag()));
}

inline double ldexp_scalar(double v, int e) { return std::ldexp(v, e); }
inline std::complex<double> ldexp_scalar(const std::complex<double>& v, int e) {
  return {std::ldexp(v.real(), e), std::ldexp(v.imag(), e)};
}

}  // namespace detail

/// Nonnegative quantity m * 2^e kept in a normalized mantissa window so that
/// sums and quotients survive far beyond the double range. Used for running
/// Turan sums, band-relative weights and log-space products.
class ScaledReal {
 public:
  ScaledReal() = default;
  ScaledReal(double mantissa, std::int64_t exponent) { assign(mantissa, exponent); }

  static ScaledReal from(double value) { return ScaledReal(value, 0); }

  void assign(double mantissa, std::int64_t exponent) {
    m_ = mantissa;
    e_ = exponent;
    normalize();
  }

  void add(double mantissa, std::int64_t exponent) {
    ScaledReal t(mantissa, exponent);
    add(t);
  }

  void add(const ScaledReal& o) {
    if (o.m_ == 0.0) return;
    if (m_ == 0.0) {
      *this = o;
      return;
    }
    std::int64_t d = o.e_ - e_;
    if (d > 1100) {
      *this = o;  // our value is below one ulp of theirs
    } else if (d >= -1100) {
      m_ += std::ldexp(o.m_, static_cast<int>(d));
      normalize();
    }  // else: their value is negligible
  }

  void multiply(double factor) {
    m_ *= factor;
    normalize();
  }

  double mantissa() const noexcept { return m_; }
  std::int64_t exponent() const noexcept { return e_; }
  bool is_zero() const noexcept { return m_ == 0.0; }

  /// log2 of |value|; -inf for zero.
  double log2_abs() const {
    if (m_ == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log2(std::fabs(m_)) + static_cast<double>(e_);
  }

  /// Collapse to double. Overflows to +/-inf and underflows to 0 honestly.
  double to_double() const {
    if (m_ == 0.0) return 0.0;
    if (e_ > 2000) return m_ > 0 ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
    if (e_ < -2000) return 0.0;
    return std::ldexp(m_, static_cast<int>(e_));
  }

  /// this / o collapsed to double (exponents subtract before collapsing).
  double divide_to_double(const ScaledReal& o) const {
    if (o.m_ == 0.0) return std::numeric_limits<double>::quiet_NaN();
    ScaledReal r(m_ / o.m_, e_ - o.e_);
    return r.to_double();
  }

 private:
  void normalize() {
    if (m_ == 0.0 || !std::isfinite(m_)) {
      if (m_ == 0.0) e_ = 0;
      return;
    }
    int k = std::ilogb(m_);
    if (k > 256 || k < -256) {
      m_ = std::ldexp(m_, -k);
      e_ += k;
    }
  }

  double m_ = 0.0;
  std::int64_t e_ = 0;
};

}  // namespace jacspec

#endif
