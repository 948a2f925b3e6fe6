#ifndef JACSPEC_COEFFICIENTS_HPP
#define JACSPEC_COEFFICIENTS_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jacspec {

/// One row of a Jacobi matrix: diagonal entry a_k and positive
/// off-diagonal entry b_k.
struct Coefs {
  double a;
  double b;
};

/// Deterministic provider of Jacobi coefficients (a_k, b_k), k >= 0.
///
/// Presets cover the standard example families; table-backed sequences are
/// finite and refuse queries past their last row instead of extrapolating.
/// Queries are pure: the same k always returns bit-identical values, and a
/// sequence may be shared across threads without synchronization.
class CoefficientSequence {
 public:
  enum class Kind { Constant, Hermite, Power, Paired, Table, Custom };

  using Closure = std::function<Coefs(std::size_t)>;

  /// a_k = a, b_k = b.
  static CoefficientSequence constant(double a, double b);

  /// a_k = 0, b_k = sqrt((k+1)/2). The Jacobi matrix of the (orthonormal)
  /// Hermite polynomials.
  static CoefficientSequence hermite();

  /// a_k = 0, b_k = scale * (k+1)^exponent, scale > 0.
  static CoefficientSequence power(double exponent, double scale);

  /// a_k = 0, b_0 = 1, b_{2k-1} = b_{2k} = ratio^k: consecutive off-diagonal
  /// entries are glued in pairs. Nondecreasing for ratio >= 1.
  static CoefficientSequence paired(double ratio);

  /// Finite sequence backed by explicit rows. Rejects non-finite entries
  /// and non-positive b.
  static CoefficientSequence from_rows(std::vector<Coefs> rows);

  /// User-defined closure; the caller is responsible for determinism.
  static CoefficientSequence custom(Closure fn, std::string label,
                                    std::optional<std::size_t> length = std::nullopt);

  Coefs at(std::size_t k) const;
  double a(std::size_t k) const { return at(k).a; }
  double b(std::size_t k) const { return at(k).b; }

  Kind kind() const noexcept { return kind_; }
  /// Number of defined rows for finite sequences, nullopt when unbounded.
  std::optional<std::size_t> length() const noexcept { return length_; }
  /// Largest index n such that indices 0..n+extra are all defined.
  bool defined_up_to(std::size_t k) const noexcept;

  /// Human-readable family description ("hermite", "constant(0,0.5)", ...).
  const std::string& describe() const noexcept { return label_; }

  /// Analytic verdict for divergence of sum(1/b_k) where the family makes
  /// it decidable: true = divergent (Carleman condition holds), false =
  /// convergent, nullopt = unknown (tables, closures).
  std::optional<bool> carleman_divergent() const;

  /// True when a_k = 0 identically by construction (hermite, power, paired).
  bool diagonal_is_zero() const noexcept;

  /// View of the same sequence starting at index `offset`.
  CoefficientSequence shifted(std::size_t offset) const;

 private:
  CoefficientSequence() = default;

  Kind kind_ = Kind::Custom;
  double p0_ = 0.0, p1_ = 0.0;  // family parameters, meaning depends on kind
  std::vector<Coefs> rows_;
  Closure closure_;
  std::optional<std::size_t> length_;
  std::size_t offset_ = 0;
  std::string label_;
};

/// Support of the constant-tail operator built from row n:
/// [a_n - 2 b_n, a_n + 2 b_n].
struct BandInterval {
  std::size_t n;
  double lo;
  double hi;

  double width() const noexcept { return hi - lo; }
  double center() const noexcept { return 0.5 * (lo + hi); }
  bool contains_interior(double x, double margin = 0.0) const noexcept {
    return x > lo + margin && x < hi - margin;
  }
};

BandInterval band_interval(const CoefficientSequence& seq, std::size_t n);

struct CenteredReport {
  bool centered = false;
  /// First index in [n_start, n_end] from which [a,b] stays strictly inside
  /// every band interval up to n_end. Meaningful only when centered.
  std::size_t from_index = 0;
  std::size_t n_start = 0;
  std::size_t n_end = 0;
  double margin = 0.0;
};

/// Scans band intervals on [n_start, n_end] for strict containment of
/// [a, b] in their open interior (with an optional float-tie margin).
CenteredReport centered_check(const CoefficientSequence& seq, double a, double b,
                              std::size_t n_start, std::size_t n_end,
                              double margin = 0.0);

struct CarlemanReport {
  double partial_sum = 0.0;  // S_N = sum_{k<N} 1/b_k
  std::size_t terms = 0;
  enum class Trend { GrowingUnbounded, ApparentlyConvergent } trend =
      Trend::GrowingUnbounded;
  /// Analytic verdict when the family provides one; never inferred from
  /// finitely many terms.
  std::optional<bool> analytic_divergent;
};

/// Partial sums of sum(1/b_k) plus a decay-exponent trend classification.
/// The trend is a heuristic; only the analytic flag is a verdict.
CarlemanReport carleman_diagnostic(const CoefficientSequence& seq, std::size_t N);

/// Parses the coefficient-table format: one row per k, "a_k,b_k", decimal
/// text, no header (conventional extension .jcoef.csv).
CoefficientSequence load_table(std::istream& in);

}  // namespace jacspec

#endif
