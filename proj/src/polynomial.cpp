#include "crglab/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace crg {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPoly: addition overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPoly: multiplication overflow");
  return r;
}

}  // namespace checked

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(std::int64_t c) { return IntPoly({c}); }

IntPoly IntPoly::linear_root(std::int64_t root) { return IntPoly({-root, 1}); }

IntPoly IntPoly::q_integer(int k) {
  if (k <= 0) throw std::invalid_argument("q_integer: k must be positive");
  return IntPoly(std::vector<std::int64_t>(static_cast<std::size_t>(k), 1));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::int64_t IntPoly::eval(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked::add(checked::mul(acc, t), *it);
  }
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) { return *this += o * -1; }

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  r += o;
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  r -= o;
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = checked::add(out[i + j], checked::mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(std::int64_t s) const {
  std::vector<std::int64_t> out(coeffs_);
  for (auto& c : out) c = checked::mul(c, s);
  return IntPoly(std::move(out));
}

bool IntPoly::divide_exact(const IntPoly& divisor, IntPoly& out) const {
  if (divisor.is_zero()) throw std::invalid_argument("IntPoly: division by zero polynomial");
  if (is_zero()) {
    out = IntPoly();
    return true;
  }
  if (degree() < divisor.degree()) return false;
  std::vector<std::int64_t> rem(coeffs_);
  const int dd = divisor.degree();
  const std::int64_t lead = divisor.leading();
  std::vector<std::int64_t> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (int k = degree() - dd; k >= 0; --k) {
    const std::int64_t top = rem[static_cast<std::size_t>(k + dd)];
    if (top % lead != 0) return false;
    const std::int64_t q = top / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = checked::add(slot, -checked::mul(q, divisor.coeffs_[static_cast<std::size_t>(j)]));
    }
  }
  for (std::int64_t c : rem) {
    if (c != 0) return false;
  }
  out = IntPoly(std::move(quot));
  return true;
}

bool IntPoly::integer_roots(std::vector<std::int64_t>& roots) const {
  roots.clear();
  if (is_zero() || leading() != 1) return false;
  IntPoly rest = *this;
  while (rest.degree() > 0) {
    // Any integer root divides the lowest nonzero coefficient; zero roots first.
    if (rest.coeff(0) == 0) {
      roots.push_back(0);
      IntPoly q;
      rest.divide_exact(IntPoly({0, 1}), q);
      rest = q;
      continue;
    }
    const std::int64_t c0 = std::llabs(rest.coeff(0));
    bool found = false;
    for (std::int64_t cand = 1; cand <= c0 && !found; ++cand) {
      if (c0 % cand != 0) continue;
      for (std::int64_t r : {cand, -cand}) {
        if (rest.eval(r) == 0) {
          IntPoly q;
          rest.divide_exact(linear_root(r), q);
          rest = q;
          roots.push_back(r);
          found = true;
          break;
        }
      }
    }
    if (!found) {
      roots.clear();
      return false;
    }
  }
  std::sort(roots.begin(), roots.end());
  return true;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coeff(i);
    if (c == 0) continue;
    const std::int64_t a = std::llabs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace crg
