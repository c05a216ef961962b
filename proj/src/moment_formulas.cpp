#include "nclab/moment_formulas.hpp"

#include <map>

#include "nclab/nc_enumerate.hpp"
#include "nclab/ncl_bijection.hpp"
#include "nclab/text_format.hpp"

namespace nclab {

namespace {

Monomial t(std::size_t index) { return Monomial::variable(static_cast<int>(index)); }

class KappaCache {
 public:
  const MomentPolynomial& get(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, kappa_poly(n)).first;
    return it->second;
  }

 private:
  std::map<int, MomentPolynomial> cache_;
};

MomentPolynomial kappa_product(const Partition& b, KappaCache& kappas) {
  MomentPolynomial prod = MomentPolynomial::constant(1);
  for (const auto& w : b.blocks()) prod = prod * kappas.get(static_cast<int>(w.size()));
  return prod;
}

}  // namespace

Monomial ncl_monomial(const LinkedPartition& p) {
  Monomial m;
  for (const auto& blk : p.blocks()) m = m * t(blk.size() - 1);
  return m;
}

Monomial pair_monomial(const Partition& alpha, const Partition& beta) {
  auto cls = classify_blocks(alpha, beta);
  Monomial m;
  for (std::size_t i = 0; i < alpha.block_count(); ++i) {
    std::size_t s = alpha.block(i).size();
    m = m * t(cls.is_special(i) ? s - 1 : s);
  }
  return m;
}

MomentPolynomial moment_poly_ncl(int n) {
  MomentPolynomial p;
  for_each_ncl(n, [&](const LinkedPartition& pi) { p.add_term(ncl_monomial(pi), 1); });
  return p;
}

MomentPolynomial moment_poly_pairs(int n) {
  MomentPolynomial p;
  for_each_nc(n, [&](const Partition& beta) {
    for_each_below_ll(beta, [&](const Partition& alpha) { p.add_term(pair_monomial(alpha, beta), 1); });
  });
  return p;
}

MomentPolynomial moment_poly_innerouter(int n) {
  MomentPolynomial p;
  for_each_nc(n, [&](const Partition& alpha) {
    auto inner = inner_mask(alpha);
    MomentPolynomial term = MomentPolynomial::constant(1);
    for (std::size_t i = 0; i < alpha.block_count(); ++i) {
      std::size_t s = alpha.block(i).size();
      MomentPolynomial factor = MomentPolynomial::monomial(t(s - 1));
      if (inner[i]) factor += MomentPolynomial::monomial(t(s));
      term = term * factor;
    }
    p += term;
  });
  return p;
}

MomentPolynomial kappa_poly(int n) {
  if (n < 1) throw ShapeError("n must be positive, got " + std::to_string(n));
  if (n == 1) return MomentPolynomial::constant(1);
  MomentPolynomial p;
  for_each_nc(n - 1, [&](const Partition& gamma) {
    Monomial m;
    for (const auto& v : gamma.blocks()) m = m * t(v.size());
    p.add_term(m, 1);
  });
  return p;
}

MomentPolynomial moment_poly_via_cumulants(int n) {
  KappaCache kappas;
  MomentPolynomial p;
  for_each_nc(n, [&](const Partition& beta) { p += kappa_product(beta, kappas); });
  return p;
}

MomentPolynomial beta_term_sum(const Partition& b) {
  MomentPolynomial p;
  for_each_below_ll(b, [&](const Partition& alpha) { p.add_term(pair_monomial(alpha, b), 1); });
  return p;
}

bool beta_term_identity(int n, const Partition& b) {
  if (!b.standard_ground() || static_cast<int>(b.size()) != n) {
    throw PreconditionError("partition " + to_text(b) + " is not a partition of {1.." + std::to_string(n) + "}");
  }
  if (!is_noncrossing(b)) throw PreconditionError("partition " + to_text(b) + " is not non-crossing");
  KappaCache kappas;
  return kappa_product(b, kappas) == beta_term_sum(b);
}

}  // namespace nclab
