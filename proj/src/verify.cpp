#include "nclab/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "nclab/free_transforms.hpp"
#include "nclab/moment_formulas.hpp"
#include "nclab/nc_enumerate.hpp"
#include "nclab/ncl_bijection.hpp"
#include "nclab/text_format.hpp"

namespace nclab {

namespace {

std::string range_of(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

// Accumulates one identity; the first counterexample is kept.
class Check {
 public:
  Check(std::string suite, std::string name, int lo, int hi)
      : result_{std::move(suite), std::move(name), range_of(lo, hi), true, {}} {}

  void require(bool ok, const std::string& what) {
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.detail = what;
  }
  void note(const std::string& text) {
    if (result_.passed) result_.detail = text;
  }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].get_str();
  }
  return out;
}

const char* const kLowOrder[] = {
    "1",
    "t1 + 1",
    "t2 + t1^2 + 3*t1 + 1",
    "t3 + 3*t2*t1 + t1^3 + 4*t2 + 6*t1^2 + 6*t1 + 1",
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

std::vector<CheckResult> verify_bijection(int n_max) {
  std::vector<CheckResult> out;
  const std::string suite = "bijection";

  // |NCL(11)| is about a million; exhaustive passes stop at 10.
  const int enum_max = std::min(n_max, 10);
  Check round_trip(suite, "from_pair(to_pair(pi)) = pi on NCL(n) from the direct generator", 1, enum_max);
  Check reverse_trip(suite, "to_pair(from_pair(alpha, beta)) = (alpha, beta) on all alpha << beta", 1, enum_max);
  Check pair_valid(suite, "cycled unlinking is non-crossing and << generated partition", 1, enum_max);
  Check minima(suite, "min(A) singly covered iff min(A) = min(W)", 1, enum_max);
  std::size_t trips = 0;
  for (int n = 1; n <= enum_max; ++n) {
    std::size_t direct_count = 0;
    for_each_ncl_direct(n, [&](const LinkedPartition& pi) {
      ++direct_count;
      auto pair = to_pair(pi);
      pair_valid.require(is_noncrossing(pair.alpha) && ll(pair.alpha, pair.beta), "fails for " + to_text(pi));
      round_trip.require(from_pair(pair.alpha, pair.beta) == pi, "fails for " + to_text(pi));
      auto c = cover(pi);
      for (const auto& blk : pi.blocks()) {
        const auto& w = pair.beta.block(pair.beta.block_of(blk.front()));
        minima.require((!c.doubly_covered(blk.front())) == (blk.front() == w.front()),
                        "fails for block " + block_to_string(blk) + " of " + to_text(pi));
      }
    });
    std::size_t pair_count = 0;
    for_each_nc(n, [&](const Partition& beta) {
      for_each_below_ll(beta, [&](const Partition& alpha) {
        ++pair_count;
        reverse_trip.require(to_pair(from_pair(alpha, beta)) == PartitionPair{alpha, beta},
                             "fails for (" + to_text(alpha) + ", " + to_text(beta) + ")");
      });
    });
    round_trip.require(direct_count == pair_count, "|NCL(" + std::to_string(n) + ")| differs from the pair count");
    trips += direct_count + pair_count;
  }
  round_trip.note("round-trips: 2·|NCL(n)| summed = " + std::to_string(trips));
  reverse_trip.note("round-trips: " + std::to_string(trips));
  out.push_back(round_trip.done());
  out.push_back(reverse_trip.done());
  out.push_back(pair_valid.done());
  out.push_back(minima.done());

  const int inj_max = std::min(n_max, 7);
  Check injective(suite, "(generated, unlink) determines pi", 1, inj_max);
  for (int n = 1; n <= inj_max; ++n) {
    std::set<std::pair<Partition, Partition>> seen;
    std::size_t count = 0;
    for_each_ncl_direct(n, [&](const LinkedPartition& pi) {
      ++count;
      seen.emplace(generated(pi), unlink(pi));
    });
    injective.require(seen.size() == count, "collision at n=" + std::to_string(n));
  }
  out.push_back(injective.done());

  const int irr_max = std::min(n_max, 8);
  Check irreducible(suite, "unlinking is a bijection from {pi : generated = 1_n} onto {alpha : 1~2}", 2, irr_max);
  for (int n = 2; n <= irr_max; ++n) {
    std::set<Partition> images;
    std::size_t count = 0;
    const Partition top = coarsest(n);
    for_each_ncl_direct(n, [&](const LinkedPartition& pi) {
      if (generated(pi) != top) return;
      ++count;
      auto check = unlink(pi);
      irreducible.require(check.block_of(1) == check.block_of(2), "1 and 2 separated for " + to_text(pi));
      images.insert(check);
    });
    std::size_t target = 0;
    for_each_nc(n, [&](const Partition& a) { target += a.block_of(1) == a.block_of(2) ? 1 : 0; });
    irreducible.require(images.size() == count && count == target &&
                            Integer(static_cast<unsigned long>(count)) == catalan(static_cast<unsigned>(n - 1)),
                        "cardinality mismatch at n=" + std::to_string(n));
  }
  out.push_back(irreducible.done());
  return out;
}

std::vector<CheckResult> verify_counts(int n_max) {
  std::vector<CheckResult> out;
  const std::string suite = "counts";

  const int enum_max = std::min(n_max, 10);
  Check nc_size(suite, "|NC(n)| = Cat_n", 1, n_max);
  Check ncl_enum(suite, "|NCL(n)| direct = bijective = ncl_count", 1, enum_max);
  Check ncl_sizes(suite, "ncl_count = coloured_count = r_{n-1}", 1, n_max);
  Check pair_sums(suite, "sum of count_below_ll = sum of count_above_ll", 1, n_max);
  std::vector<Integer> seq;
  for (int n = 1; n <= n_max; ++n) {
    std::size_t nc = 0;
    Integer below = 0;
    Integer above = 0;
    for_each_nc(n, [&](const Partition& p) {
      ++nc;
      below += count_below_ll(p);
      above += count_above_ll(p);
    });
    nc_size.require(Integer(static_cast<unsigned long>(nc)) == catalan(static_cast<unsigned>(n)),
                    "n=" + std::to_string(n));
    pair_sums.require(below == above, "n=" + std::to_string(n));

    Integer count = ncl_count(n);
    Integer s = schroeder(static_cast<unsigned>(n - 1));
    ncl_sizes.require(count == coloured_count(n) && count == s,
                      "n=" + std::to_string(n) + ": ncl_count " + count.get_str() + ", r_{n-1} " + s.get_str());
    seq.push_back(count);

    if (n > enum_max) continue;
    std::size_t direct = 0;
    for_each_ncl_direct(n, [&](const LinkedPartition&) { ++direct; });
    std::size_t bijective = 0;
    for_each_ncl(n, [&](const LinkedPartition&) { ++bijective; });
    Integer d(static_cast<unsigned long>(direct));
    ncl_enum.require(d == Integer(static_cast<unsigned long>(bijective)) && d == count,
                     "n=" + std::to_string(n) + ": direct " + d.get_str() + ", bijective " +
                         std::to_string(bijective) + ", ncl_count " + count.get_str());
  }
  ncl_sizes.note("schroeder: " + join(seq));
  out.push_back(nc_size.done());
  out.push_back(ncl_enum.done());
  out.push_back(ncl_sizes.done());
  out.push_back(pair_sums.done());

  const int filter_max = std::min(n_max, 7);
  Check floor_eq(suite, "alpha << beta iff beta_floor(beta) <= alpha <= beta", 1, filter_max);
  Check below(suite, "enumerate_below_ll(beta) = filter of NC(n) = prod Cat_{|W|-1}", 1, filter_max);
  Check above(suite, "enumerate_above_ll(alpha) = filter of NC(n), 2^inner, special sets", 1, filter_max);
  for (int n = 1; n <= filter_max; ++n) {
    auto all = enumerate_nc(n);
    for (const auto& beta : all) {
      auto floor = beta_floor(beta);
      std::set<Partition> filtered;
      for (const auto& alpha : all) {
        bool rel = ll(alpha, beta);
        floor_eq.require(rel == (leq(floor, alpha) && leq(alpha, beta)) && (!rel || leq(alpha, beta)),
                         "(" + to_text(alpha) + ", " + to_text(beta) + ")");
        if (rel) filtered.insert(alpha);
      }
      auto built = enumerate_below_ll(beta);
      std::set<Partition> built_set(built.begin(), built.end());
      below.require(built_set == filtered && built.size() == built_set.size() &&
                        Integer(static_cast<unsigned long>(filtered.size())) == count_below_ll(beta),
                    "beta=" + to_text(beta));
    }
    for (const auto& alpha : all) {
      std::set<Partition> filtered;
      for (const auto& beta : all) {
        if (ll(alpha, beta)) filtered.insert(beta);
      }
      auto built = enumerate_above_ll(alpha);
      std::set<Partition> built_set;
      std::set<std::vector<std::size_t>> specials;
      auto cls_outer = classify_blocks(alpha, alpha).outer;
      for (const auto& item : built) {
        built_set.insert(item.beta);
        specials.insert(item.special);
        above.require(classify_blocks(alpha, item.beta).special == item.special,
                      "special set mismatch for alpha=" + to_text(alpha) + ", beta=" + to_text(item.beta));
        above.require(std::ranges::includes(item.special, cls_outer), "outer block missing for alpha=" + to_text(alpha));
      }
      above.require(built_set == filtered && specials.size() == built.size() && built.size() == built_set.size() &&
                        Integer(static_cast<unsigned long>(built.size())) == count_above_ll(alpha),
                    "alpha=" + to_text(alpha));
    }
  }
  out.push_back(floor_eq.done());
  out.push_back(below.done());
  out.push_back(above.done());
  return out;
}

std::vector<CheckResult> verify_moments(int n_max) {
  std::vector<CheckResult> out;
  const std::string suite = "moments";

  const int poly_max = std::min(n_max, 8);
  Check routes(suite, "NCL = pairs = inner/outer = via cumulants, as polynomials", 1, poly_max);
  Check positive(suite, "NCL moment polynomial has positive integer coefficients", 1, poly_max);
  Check per_term(suite, "NCL monomial of pi = pair monomial of to_pair(pi)", 1, poly_max);
  for (int n = 1; n <= poly_max; ++n) {
    auto p = moment_poly_ncl(n);
    routes.require(p == moment_poly_pairs(n) && p == moment_poly_innerouter(n) && p == moment_poly_via_cumulants(n),
                   "n=" + std::to_string(n) + ": " + to_text(p));
    for (const auto& [m, c] : p.terms()) positive.require(c > 0, "n=" + std::to_string(n));
    for_each_ncl(n, [&](const LinkedPartition& pi) {
      auto pair = to_pair(pi);
      per_term.require(ncl_monomial(pi) == pair_monomial(pair.alpha, pair.beta), "pi=" + to_text(pi));
    });
  }
  out.push_back(routes.done());
  out.push_back(positive.done());
  out.push_back(per_term.done());

  const int low = std::min(n_max, 4);
  Check low_order(suite, "low-order moment polynomials", 1, low);
  for (int n = 1; n <= low; ++n) {
    auto text = to_text(moment_poly_innerouter(n));
    low_order.require(text == kLowOrder[n - 1], "n=" + std::to_string(n) + " gave " + text);
  }
  out.push_back(low_order.done());

  const int beta_max = std::min(n_max, 6);
  Check per_beta(suite, "prod kappa_{|W|} = sum over alpha << beta, for every beta", 1, beta_max);
  for (int n = 1; n <= beta_max; ++n) {
    for_each_nc(n, [&](const Partition& b) { per_beta.require(beta_term_identity(n, b), "beta=" + to_text(b)); });
  }
  out.push_back(per_beta.done());

  const std::size_t depth = static_cast<std::size_t>(std::min(n_max, 8));
  Check transforms(suite, "S * (1/S) = 1, moments_from_t(T) = m, two cumulant routes agree (100 random)",
                   static_cast<int>(depth), static_cast<int>(depth));
  Check bridge(suite, "evaluated inner/outer polynomial = numeric moments_from_t (100 random)", 1,
               static_cast<int>(depth));
  std::mt19937_64 rng(20090117);
  std::vector<MomentPolynomial> polys;
  for (std::size_t n = 1; n <= depth; ++n) polys.push_back(moment_poly_innerouter(static_cast<int>(n)));
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> mu{Rational(1)};
    for (std::size_t n = 2; n <= depth; ++n) mu.push_back(random_rational(rng));
    MomentSequence m(mu);
    auto s = s_transform(m);
    auto tt = t_transform(m);
    transforms.require(s * tt == TruncatedSeries::constant(1, depth - 1), "S/T product, trial " + std::to_string(trial));
    transforms.require(moments_from_t(tt.coeffs(), depth) == m, "moment round trip, trial " + std::to_string(trial));
    transforms.require(cumulants_from_t(tt.coeffs(), depth) == cumulants_from_moments(m),
                       "cumulant routes, trial " + std::to_string(trial));
    auto inverse = compositional_inverse(moment_series(m));
    transforms.require(compose(moment_series(m), inverse) == TruncatedSeries::identity(depth),
                       "M(M^<-1>) != z, trial " + std::to_string(trial));

    std::vector<Rational> t{Rational(1)};
    for (std::size_t i = 1; i < depth; ++i) t.push_back(random_rational(rng));
    auto numeric = moments_from_t(t, depth);
    for (std::size_t n = 1; n <= depth; ++n) {
      bridge.require(evaluate(polys[n - 1], t) == numeric[n], "trial " + std::to_string(trial));
    }
  }
  out.push_back(transforms.done());
  out.push_back(bridge.done());
  return out;
}

std::vector<CheckResult> verify_all(int n_max) {
  auto out = verify_bijection(n_max);
  for (auto& c : verify_counts(n_max)) out.push_back(std::move(c));
  for (auto& c : verify_moments(n_max)) out.push_back(std::move(c));
  return out;
}

}  // namespace nclab
