#pragma once

#include "crystalr/laurent.hpp"
#include "crystalr/partition.hpp"

namespace crystalr {

// Gaussian binomial [M choose N]_q; zero when N > M or either is negative.
LaurentPolynomial q_binomial(int M, int N);

// Kostka polynomial K_{λμ}(q) by the sl_n fermionic configuration sum.
// Requires |λ| = |μ| and length(λ) <= n.
LaurentPolynomial kostka_fermionic(const Partition& lambda, const Partition& mu, int n);

}  // namespace crystalr
