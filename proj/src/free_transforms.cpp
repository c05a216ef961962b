#include "nclab/free_transforms.hpp"

#include "nclab/nc_enumerate.hpp"

namespace nclab {

namespace {

void require_t(std::span<const Rational> t, std::size_t highest) {
  if (t.empty() || t[0] != 1) throw NormalizationError("t_0 must be 1");
  if (t.size() <= highest) {
    throw DepthError("need t_0..t_" + std::to_string(highest) + " but only " + std::to_string(t.size()) +
                     " coefficients were given");
  }
}

}  // namespace

MomentSequence::MomentSequence(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw ShapeError("a moment sequence needs at least mu_1");
  if (values_[0] != 1) throw NormalizationError("mu_1 must be 1, got " + to_string(values_[0]));
}

const Rational& MomentSequence::operator[](std::size_t n) const {
  if (n < 1 || n > values_.size()) {
    throw DepthError("moment " + std::to_string(n) + " requested from depth " + std::to_string(values_.size()));
  }
  return values_[n - 1];
}

TruncatedSeries moment_series(const MomentSequence& m) {
  std::vector<Rational> c(m.depth() + 1, Rational(0));
  for (std::size_t n = 1; n <= m.depth(); ++n) c[n] = m[n];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries s_transform(const MomentSequence& m) {
  auto inverse = compositional_inverse(moment_series(m));
  auto one_plus_z = TruncatedSeries::constant(1, inverse.order()) + TruncatedSeries::identity(inverse.order());
  return one_plus_z * divide_by_z(inverse);
}

TruncatedSeries t_transform(const MomentSequence& m) { return reciprocal(s_transform(m)); }

MomentSequence moments_from_t(std::span<const Rational> t, std::size_t n_max) {
  if (n_max < 1) throw ShapeError("n_max must be positive");
  require_t(t, n_max - 1);
  std::vector<Rational> mu;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational total = 0;
    for_each_nc(static_cast<int>(n), [&](const Partition& alpha) {
      auto inner = inner_mask(alpha);
      Rational term = 1;
      for (std::size_t i = 0; i < alpha.block_count() && term != 0; ++i) {
        std::size_t s = alpha.block(i).size();
        term *= inner[i] ? Rational(t[s - 1] + t[s]) : t[s - 1];
      }
      total += term;
    });
    mu.push_back(total);
  }
  return MomentSequence(std::move(mu));
}

std::vector<Rational> cumulants_from_moments(const MomentSequence& m) {
  std::vector<Rational> kappa;
  for (std::size_t n = 1; n <= m.depth(); ++n) {
    Rational rest = 0;
    for_each_nc(static_cast<int>(n), [&](const Partition& beta) {
      if (beta.block_count() == 1) return;
      Rational term = 1;
      for (const auto& w : beta.blocks()) term *= kappa[w.size() - 1];
      rest += term;
    });
    kappa.push_back(m[n] - rest);
  }
  return kappa;
}

MomentSequence moments_from_cumulants(std::span<const Rational> kappa, std::size_t n_max) {
  if (n_max < 1) throw ShapeError("n_max must be positive");
  if (kappa.size() < n_max) {
    throw DepthError("need kappa_1..kappa_" + std::to_string(n_max) + " but only " + std::to_string(kappa.size()) +
                     " were given");
  }
  if (kappa[0] != 1) throw NormalizationError("kappa_1 = mu_1 must be 1");
  std::vector<Rational> mu;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational total = 0;
    for_each_nc(static_cast<int>(n), [&](const Partition& beta) {
      Rational term = 1;
      for (const auto& w : beta.blocks()) term *= kappa[w.size() - 1];
      total += term;
    });
    mu.push_back(total);
  }
  return MomentSequence(std::move(mu));
}

std::vector<Rational> cumulants_from_t(std::span<const Rational> t, std::size_t n_max) {
  if (n_max < 1) throw ShapeError("n_max must be positive");
  require_t(t, n_max - 1);
  std::vector<Rational> kappa{Rational(1)};
  for (std::size_t n = 2; n <= n_max; ++n) {
    Rational total = 0;
    for_each_nc(static_cast<int>(n - 1), [&](const Partition& gamma) {
      Rational term = 1;
      for (const auto& v : gamma.blocks()) term *= t[v.size()];
      total += term;
    });
    kappa.push_back(total);
  }
  return kappa;
}

}  // namespace nclab
