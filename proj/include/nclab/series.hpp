#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nclab/error.hpp"
#include "nclab/numeric.hpp"

namespace nclab {

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
/// Accepts "p" or "p/q" (optional leading '-'); no decimals. Throws ParseError.
Rational parse_rational(std::string_view text);
/// Comma-separated rationals, e.g. "1,1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// A power series c_0 + c_1 z + ... + c_N z^N known exactly up to its order N.
/// Coefficients beyond the order are unknown, never implicitly zero.
class TruncatedSeries {
 public:
  /// Order is coeffs.size() - 1; throws ShapeError for an empty list.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// z at the given order (order >= 1).
  static TruncatedSeries identity(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  /// Throws DepthError for k > order().
  const Rational& coeff(std::size_t k) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Drops coefficients above `order` (which must not exceed order()).
  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Results carry the smaller order of the two operands.
TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f);

/// g with f g = 1; requires f_0 != 0 (PreconditionError).
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// f(g(z)); requires g_0 = 0. Order is min(f.order(), g.order()).
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// g with f(g(z)) = z; requires f_0 = 0 and f_1 != 0, each checked with
/// its own diagnostic.
TruncatedSeries compositional_inverse(const TruncatedSeries& f);

/// c_0 + ... + c_{N-1} z^{N-1} from a series whose constant term is zero,
/// i.e. division by z. Order drops by one.
TruncatedSeries divide_by_z(const TruncatedSeries& f);

std::string to_text(const TruncatedSeries& f);
/// {"order": N, "coeffs": ["1", "1/2", ...]}
nlohmann::ordered_json to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::ordered_json& j);

}  // namespace nclab
