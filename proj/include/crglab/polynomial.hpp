#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crg {

/// Dense univariate polynomial with int64 coefficients, lowest degree first.
/// Arithmetic is overflow-checked and throws std::overflow_error.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  static IntPoly constant(std::int64_t c);
  /// t - root
  static IntPoly linear_root(std::int64_t root);
  /// [k]_q = 1 + q + ... + q^{k-1}
  static IntPoly q_integer(int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(int i) const;
  std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  std::int64_t eval(std::int64_t t) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(std::int64_t s) const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const = default;

  /// Exact division. Returns false (and leaves out untouched) when the
  /// divisor does not divide this polynomial over the integers.
  bool divide_exact(const IntPoly& divisor, IntPoly& out) const;

  /// Integer roots with multiplicity. Returns false unless the polynomial
  /// is monic and splits into linear factors over Z.
  bool integer_roots(std::vector<std::int64_t>& roots) const;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace crg
