#include "matcharr/polynomial.hpp"

#include <sstream>

namespace matcharr {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  trim();
}

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_roots(const std::vector<BigInt>& roots) {
  IntPolynomial p({1});
  for (const auto& r : roots) p.mul_linear(r);
  return p;
}

void IntPolynomial::mul_linear(const BigInt& c) {
  // (sum a_i x^i) * (x - c)
  coeffs_.push_back(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    BigInt v = (i > 0 ? coeffs_[i - 1] : BigInt(0)) - c * coeffs_[i];
    coeffs_[i] = v;
  }
  trim();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0 && coeffs_.size() > 1) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace matcharr
