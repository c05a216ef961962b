#include "nclab/series.hpp"

#include <algorithm>
#include <regex>

namespace nclab {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(\s*(-?[0-9]+)(?:/([0-9]+))?\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw ParseError("not a rational number: \"" + std::string(text) + "\"");
  }
  Integer num(m[1].str());
  Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ShapeError("a series needs at least its constant term");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1, Rational(0));
  v[0] = c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  if (order < 1) throw ShapeError("z needs order at least 1");
  std::vector<Rational> v(order + 1, Rational(0));
  v[1] = 1;
  return TruncatedSeries(std::move(v));
}

const Rational& TruncatedSeries::coeff(std::size_t k) const {
  if (k > order()) {
    throw DepthError("coefficient z^" + std::to_string(k) + " requested from a series of order " +
                     std::to_string(order()));
  }
  return coeffs_[k];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw DepthError("cannot extend a series of order " + std::to_string(this->order()) + " to order " +
                     std::to_string(order));
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  std::size_t order = std::min(f.order(), g.order());
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 0; k <= order; ++k) v[k] = f.coeff(k) + g.coeff(k);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  std::size_t order = std::min(f.order(), g.order());
  std::vector<Rational> v(order + 1);
  for (std::size_t k = 0; k <= order; ++k) v[k] = f.coeff(k) - g.coeff(k);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  std::size_t order = std::min(f.order(), g.order());
  std::vector<Rational> v(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (f.coeff(i) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) v[i + j] += f.coeff(i) * g.coeff(j);
  }
  return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f) {
  std::vector<Rational> v(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : v) x *= c;
  return TruncatedSeries(std::move(v));
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  if (f.coeff(0) == 0) throw PreconditionError("reciprocal of a series with zero constant term");
  const std::size_t order = f.order();
  std::vector<Rational> g(order + 1, Rational(0));
  Rational inv0 = 1 / f.coeff(0);
  g[0] = inv0;
  for (std::size_t k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += f.coeff(i) * g[k - i];
    g[k] = -acc * inv0;
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g.coeff(0) != 0) throw PreconditionError("inner series of a composition must have zero constant term");
  const std::size_t order = std::min(f.order(), g.order());
  // Horner: f_N, then (acc * g + f_k) down to k = 0.
  TruncatedSeries inner = g.truncated(order);
  TruncatedSeries acc = TruncatedSeries::constant(f.coeff(order), order);
  for (std::size_t k = order; k-- > 0;) {
    acc = acc * inner + TruncatedSeries::constant(f.coeff(k), order);
  }
  return acc;
}

TruncatedSeries compositional_inverse(const TruncatedSeries& f) {
  if (f.order() < 1) throw DepthError("compositional inverse needs order at least 1");
  if (f.coeff(0) != 0) throw PreconditionError("compositional inverse needs a zero constant term");
  if (f.coeff(1) == 0) throw PreconditionError("compositional inverse needs a non-zero linear coefficient");
  const std::size_t order = f.order();
  // Order-by-order: with g_1..g_{k-1} fixed and g_k = 0, the z^k coefficient
  // of f(g) is r; the true g_k cancels it through the linear term f_1 g_k.
  std::vector<Rational> g(order + 1, Rational(0));
  g[1] = 1 / f.coeff(1);
  for (std::size_t k = 2; k <= order; ++k) {
    TruncatedSeries partial(std::vector<Rational>(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k) + 1));
    Rational r = compose(f.truncated(k), partial).coeff(k);
    g[k] = -r / f.coeff(1);
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries divide_by_z(const TruncatedSeries& f) {
  if (f.coeff(0) != 0) throw PreconditionError("division by z needs a zero constant term");
  if (f.order() < 1) throw DepthError("division by z needs order at least 1");
  return TruncatedSeries(std::vector<Rational>(f.coeffs().begin() + 1, f.coeffs().end()));
}

std::string to_text(const TruncatedSeries& f) {
  std::string out;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    if (k) out += ", ";
    out += to_string(f.coeff(k));
  }
  return out;
}

nlohmann::ordered_json to_json(const TruncatedSeries& f) {
  nlohmann::ordered_json j;
  j["order"] = f.order();
  auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) arr.push_back(to_string(c));
  return j;
}

TruncatedSeries series_from_json(const nlohmann::ordered_json& j) {
  try {
    auto order = j.at("order").get<std::size_t>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    if (coeffs.size() != order + 1) throw ParseError("\"coeffs\" must have order + 1 entries");
    return TruncatedSeries(std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad series JSON: ") + e.what());
  }
}

}  // namespace nclab
