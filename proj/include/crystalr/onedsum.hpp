#pragma once

#include <map>
#include <optional>

#include "crystalr/crystal.hpp"
#include "crystalr/laurent.hpp"
#include "crystalr/partition.hpp"

namespace crystalr {

// X_{λ,μ}(t) for every λ, keyed by λ, for the C1 tensor product B_{μ_1} ⊗ ... ⊗ B_{μ_L}.
// The parallel version splits the search over the first tensor factor.
std::map<Partition, LaurentPolynomial> x_polynomials(const Partition& mu, int n);
std::map<Partition, LaurentPolynomial> x_polynomials_serial(const Partition& mu, int n);

// One entry of the above.
LaurentPolynomial x_polynomial(const Partition& lambda, const Partition& mu, int n);
LaurentPolynomial x_polynomial_serial(const Partition& lambda, const Partition& mu, int n);

// C_n-highest with φ_i = λ_i - λ_{i+1} for i = 1..n.
bool highest_weight_filter(const TensorElement& t, const Partition& lambda);

// Chained insertion of the factors compared with the tableau of shape and
// weight λ.  Empty when λ has more than two rows or a factor contains a
// barred letter or 0.
std::optional<bool> hwcond_check(const TensorElement& t, const Partition& lambda);

}  // namespace crystalr
