#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace crystalr {

// Finitely supported integer Laurent polynomial in one variable.
class LaurentPolynomial {
 public:
  using Coeff = std::int64_t;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, Coeff c = 1);
  static LaurentPolynomial constant(Coeff c) { return monomial(0, c); }

  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  int min_exponent() const;  // requires non-zero
  int max_exponent() const;

  void add_term(int exponent, Coeff c);
  LaurentPolynomial shifted(int by) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Ascending exponents, e.g. "t^-1 + 2 + t + t^2"; zero renders as "0".
  std::string render(char var = 't') const;
  // Accepts the render format (any variable letter, optional '*', '-' signs).
  static LaurentPolynomial parse(const std::string& text);

 private:
  std::map<int, Coeff> terms_;
};

}  // namespace crystalr
