#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nclab/numeric.hpp"

namespace nclab {

/// A product t_{i_1}^{e_1} ... t_{i_k}^{e_k}, stored sparsely with
/// increasing indices i >= 1 and exponents e >= 1. t_0 is never stored:
/// it is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  /// t_index^exponent; t_0 (or exponent 0) gives the unit monomial.
  static Monomial variable(int index, int exponent = 1);

  const std::vector<std::pair<int, int>>& factors() const noexcept { return factors_; }
  int exponent(int index) const noexcept;
  /// Sum of exponents.
  int degree() const noexcept;
  /// Sum of index * exponent.
  int weight() const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, int>> factors_;
};

/// Printing order: higher weight first; equal weight compared on the
/// exponent of the highest index, then the next, larger exponent first.
bool graded_lex_before(const Monomial& a, const Monomial& b);

/// Integer polynomial in t_1, t_2, ...; zero coefficients are never stored.
class MomentPolynomial {
 public:
  MomentPolynomial() = default;
  static MomentPolynomial constant(const Integer& c);
  /// t_index as a polynomial; t_0 is the constant 1.
  static MomentPolynomial variable(int index);
  static MomentPolynomial monomial(const Monomial& m, const Integer& c = 1);

  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;
  /// Terms in printing order.
  std::vector<std::pair<Monomial, Integer>> sorted_terms() const;
  /// Largest index occurring, 0 for a constant.
  int max_index() const noexcept;

  MomentPolynomial& operator+=(const MomentPolynomial& q);
  void add_term(const Monomial& m, const Integer& c);

  friend MomentPolynomial operator+(MomentPolynomial p, const MomentPolynomial& q) { return p += q; }
  friend MomentPolynomial operator*(const MomentPolynomial& p, const MomentPolynomial& q);
  friend bool operator==(const MomentPolynomial&, const MomentPolynomial&) = default;

 private:
  std::map<Monomial, Integer> terms_;
};

/// "t3 + 3*t2*t1 + t1^3 + 4*t2 + 6*t1^2 + 6*t1 + 1"; "0" for zero.
std::string to_text(const Monomial& m);
std::string to_text(const MomentPolynomial& p);
/// {"terms": [{"coeff": "3", "monomial": {"2": 1, "1": 1}}, ...]}
nlohmann::ordered_json to_json(const MomentPolynomial& p);

/// Exact substitution; `t` lists t_0, t_1, ... (t_0 itself is not used).
/// Throws DepthError when an occurring index is not covered.
Rational evaluate(const MomentPolynomial& p, std::span<const Rational> t);

}  // namespace nclab
