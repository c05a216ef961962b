#pragma once

#include "nclab/linked_partition.hpp"
#include "nclab/polynomial.hpp"

namespace nclab {

// Four independent expressions for the n-th moment as a polynomial in the
// coefficients t_1, t_2, ... of 1/S (with t_0 = 1).

/// prod_{A in p} t_{|A|-1}
Monomial ncl_monomial(const LinkedPartition& p);

/// prod over beta-special U of t_{|U|-1} times prod over the other blocks V
/// of alpha of t_{|V|}. Requires ll(alpha, beta).
Monomial pair_monomial(const Partition& alpha, const Partition& beta);

/// Sum of ncl_monomial over NCL(n).
MomentPolynomial moment_poly_ncl(int n);

/// Sum of pair_monomial over all pairs alpha << beta in NC(n).
MomentPolynomial moment_poly_pairs(int n);

/// Sum over alpha in NC(n) of prod_{outer U} t_{|U|-1} * prod_{inner V} (t_{|V|-1} + t_{|V|}).
MomentPolynomial moment_poly_innerouter(int n);

/// kappa_1 = 1; kappa_n = sum over gamma in NC(n-1) of prod_{V} t_{|V|}.
MomentPolynomial kappa_poly(int n);

/// sum over beta in NC(n) of prod_{W in beta} kappa_poly(|W|).
MomentPolynomial moment_poly_via_cumulants(int n);

/// sum over alpha << b of pair_monomial(alpha, b).
MomentPolynomial beta_term_sum(const Partition& b);

/// prod_{W in b} kappa_poly(|W|) == beta_term_sum(b). `b` must be a
/// non-crossing partition of {1..n} (PreconditionError otherwise).
bool beta_term_identity(int n, const Partition& b);

}  // namespace nclab
