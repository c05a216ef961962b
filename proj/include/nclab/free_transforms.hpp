#pragma once

#include <span>
#include <vector>

#include "nclab/series.hpp"

namespace nclab {

/// Moments mu_1..mu_N of a variable with mu_1 = 1.
class MomentSequence {
 public:
  /// Throws ShapeError when empty, NormalizationError when mu_1 != 1.
  explicit MomentSequence(std::vector<Rational> values);

  std::size_t depth() const noexcept { return values_.size(); }
  /// mu_n for 1 <= n <= depth(); DepthError otherwise.
  const Rational& operator[](std::size_t n) const;
  std::span<const Rational> values() const noexcept { return values_; }

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

 private:
  std::vector<Rational> values_;
};

/// M(z) = sum_{n>=1} mu_n z^n, of order depth().
TruncatedSeries moment_series(const MomentSequence& m);

/// S(z) = (1+z)/z * M^{<-1>}(z), of order depth()-1, constant term 1.
TruncatedSeries s_transform(const MomentSequence& m);

/// T(z) = 1/S(z) = sum t_n z^n with t_0 = 1, of order depth()-1.
TruncatedSeries t_transform(const MomentSequence& m);

/// mu_n = sum_{alpha in NC(n)} prod_{outer U} t_{|U|-1} prod_{inner V} (t_{|V|-1} + t_{|V|})
/// for n = 1..n_max. `t` lists t_0..t_k with t_0 = 1 (NormalizationError)
/// and k >= n_max - 1 (DepthError).
MomentSequence moments_from_t(std::span<const Rational> t, std::size_t n_max);

/// Free cumulants kappa_1..kappa_N (index 0 holds kappa_1), solving
/// mu_n = sum_{beta in NC(n)} prod_{W in beta} kappa_{|W|} one n at a time.
std::vector<Rational> cumulants_from_moments(const MomentSequence& m);

/// The forward moment-cumulant formula; `kappa` starts at kappa_1, which
/// must equal 1.
MomentSequence moments_from_cumulants(std::span<const Rational> kappa, std::size_t n_max);

/// kappa_1 = 1 and kappa_n = sum_{gamma in NC(n-1)} prod_{V in gamma} t_{|V|}.
std::vector<Rational> cumulants_from_t(std::span<const Rational> t, std::size_t n_max);

}  // namespace nclab
