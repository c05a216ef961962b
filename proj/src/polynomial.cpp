#include "nclab/polynomial.hpp"

#include <algorithm>

#include "nclab/error.hpp"

namespace nclab {

Monomial Monomial::variable(int index, int exponent) {
  if (index < 0 || exponent < 0) throw ShapeError("negative index or exponent");
  Monomial m;
  if (index > 0 && exponent > 0) m.factors_.emplace_back(index, exponent);
  return m;
}

int Monomial::exponent(int index) const noexcept {
  for (const auto& [i, e] : factors_) {
    if (i == index) return e;
  }
  return 0;
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::weight() const noexcept {
  int w = 0;
  for (const auto& [i, e] : factors_) w += i * e;
  return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
  if (a.weight() != b.weight()) return a.weight() > b.weight();
  auto ia = a.factors().rbegin();
  auto ib = b.factors().rbegin();
  while (ia != a.factors().rend() && ib != b.factors().rend()) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.factors().rend() && ib == b.factors().rend();
}

MomentPolynomial MomentPolynomial::constant(const Integer& c) { return monomial(Monomial{}, c); }

MomentPolynomial MomentPolynomial::variable(int index) { return monomial(Monomial::variable(index)); }

MomentPolynomial MomentPolynomial::monomial(const Monomial& m, const Integer& c) {
  MomentPolynomial p;
  p.add_term(m, c);
  return p;
}

Integer MomentPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::pair<Monomial, Integer>> MomentPolynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Integer>> out(terms_.begin(), terms_.end());
  std::ranges::sort(out, [](const auto& x, const auto& y) { return graded_lex_before(x.first, y.first); });
  return out;
}

int MomentPolynomial::max_index() const noexcept {
  int top = 0;
  for (const auto& [m, _] : terms_) {
    if (!m.factors().empty()) top = std::max(top, m.factors().back().first);
  }
  return top;
}

void MomentPolynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MomentPolynomial& MomentPolynomial::operator+=(const MomentPolynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MomentPolynomial operator*(const MomentPolynomial& p, const MomentPolynomial& q) {
  MomentPolynomial out;
  for (const auto& [ma, ca] : p.terms_) {
    for (const auto& [mb, cb] : q.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string to_text(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (auto it = m.factors().rbegin(); it != m.factors().rend(); ++it) {
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(it->first);
    if (it->second > 1) out += '^' + std::to_string(it->second);
  }
  return out;
}

std::string to_text(const MomentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += to_text(m);
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const MomentPolynomial& p) {
  nlohmann::ordered_json j;
  auto& terms = j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.sorted_terms()) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (auto it = m.factors().rbegin(); it != m.factors().rend(); ++it) {
      mono[std::to_string(it->first)] = it->second;
    }
    nlohmann::ordered_json term;
    term["coeff"] = c.get_str();
    term["monomial"] = std::move(mono);
    terms.push_back(std::move(term));
  }
  return j;
}

Rational evaluate(const MomentPolynomial& p, std::span<const Rational> t) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [i, e] : m.factors()) {
      if (static_cast<std::size_t>(i) >= t.size()) {
        throw DepthError("t_" + std::to_string(i) + " is needed but only t_0..t_" + std::to_string(t.size() - 1) +
                         " were given");
      }
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), t[static_cast<std::size_t>(i)].get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(power.get_den_mpz_t(), t[static_cast<std::size_t>(i)].get_den_mpz_t(), static_cast<unsigned long>(e));
      term *= power;
    }
    total += term;
  }
  return total;
}

}  // namespace nclab
