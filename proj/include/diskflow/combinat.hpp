#pragma once

// Exact counting formulas for fixed-point-free disk diagrams.
//
// Every quantity here is exact. Nothing in a counting path touches floating
// point. Indices follow the node-count convention: `n` is the (even) number
// of boundary nodes, `m` is a Catalan index.

#include <gmpxx.h>

#include <vector>

namespace diskflow {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// C_m = (2m)! / ((m+1)! m!).
BigInt catalan(int m);

/// Diagrams with one prescribed a-node: 3^(n/2-1) C_(n/2-1). n even, n >= 2.
BigInt alpha(int n);

/// Number of diagrams with n nodes: 3^(n/2-2) (C_(n/2) + 2 C_(n/2-1)).
/// For n = 2 the factor 3^(-1) is evaluated exactly and yields 1.
BigInt t_count(int n);

/// Sum of C_i C_j C_k over i + j + k = n - 1 (brute-force triple loop).
BigInt catalan_triple_sum(int n);

/// alpha(n) == 3 * sum_{k even, 2 <= k <= n-2} alpha(k) alpha(n-k).
bool alpha_recurrence_check(int n);

/// t_count(n) == alpha(n) + sum over even k,l,m >= 2, k+l+m = n+2 of
/// alpha(k) alpha(l) alpha(m).
bool t_recurrence_check(int n);

/// OEIS A275607 via its closed form 2*3^n (n+1) / (2n^2+n) * binom(2n+1, n-1),
/// evaluated over the rationals. Throws std::logic_error if the result is not
/// an integer.
BigInt a275607(int n);

/// Coefficients of x^0..x^K of T(x) = (1+6x)(1 - sqrt(1-12x)) / (54x).
std::vector<BigRational> series_coeffs(int K);

}  // namespace diskflow
