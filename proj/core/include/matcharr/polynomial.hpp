#ifndef MATCHARR_POLYNOMIAL_HPP
#define MATCHARR_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace matcharr {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer polynomial, coefficients in ascending degree order.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<BigInt> ascending_coeffs);

  static IntPolynomial constant(const BigInt& c) { return IntPolynomial({c}); }
  // Product of (x - r) over the given roots, times x^0 coefficient 1.
  static IntPolynomial from_roots(const std::vector<BigInt>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& coefficient(std::size_t i) const { return coeffs_[i]; }
  bool is_monic() const { return coeffs_.back() == 1; }

  BigInt evaluate(const BigInt& x) const;

  // multiply in place by (x - c)
  void mul_linear(const BigInt& c);

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;  // e.g. "x^3 - 6*x^2 + 11*x - 6"

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

}  // namespace matcharr

#endif
