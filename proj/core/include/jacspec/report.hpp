#ifndef JACSPEC_REPORT_HPP
#define JACSPEC_REPORT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jacspec {

/// Three-way outcome of a finite-window certificate. CertifiedAtScale means
/// the hypotheses held on the whole tested window with a stable trend; it is
/// never a claim about the limit. Violated always carries a witness.
enum class Verdict { CertifiedAtScale, Inconclusive, Violated };

const char* to_string(Verdict v) noexcept;

struct Witness {
  std::size_t n = 0;
  std::optional<double> x;
  double value = 0.0;
};

struct CriterionReport {
  std::string criterion;
  std::size_t n_begin = 0;
  std::size_t n_end = 0;
  std::vector<double> x_grid;
  std::map<std::string, double> statistics;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;  // analytic-only hypothesis flags etc.

  std::string to_json(int indent = 2) const;
};

}  // namespace jacspec

#endif
