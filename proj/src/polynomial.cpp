#include "arboreal/polynomial.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "arboreal/errors.hpp"

namespace arboreal {

namespace {

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial arithmetic overflow");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial arithmetic overflow");
  return r;
}

long long to_ll(i128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("polynomial coefficient exceeds 64 bits");
  return static_cast<long long>(v);
}

}  // namespace

Polynomial::Polynomial(std::vector<long long> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(unsigned degree, long long coefficient) {
  std::vector<long long> c(degree + 1, 0);
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

long long Polynomial::leading() const {
  return coeffs_.empty() ? 0 : coeffs_.back();
}

long long Polynomial::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : 0;
}

__int128 Polynomial::eval(__int128 x) const {
  i128 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = checked_add(checked_mul(acc, x), *it);
  return acc;
}

std::uint64_t Polynomial::eval_u64(std::uint64_t x) const {
  if (x > std::uint64_t(1) << 62)
    throw std::overflow_error("polynomial argument too large");
  i128 v = eval(i128(x));
  if (v < 0) throw std::overflow_error("polynomial value negative where nonnegative required");
  if (v > i128(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("polynomial value exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  std::vector<long long> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = to_ll(checked_add(coefficient(i), other.coefficient(i)));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::minus(const Polynomial& other) const {
  return plus(other.scaled(-1));
}

Polynomial Polynomial::scaled(long long factor) const {
  std::vector<long long> out(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = to_ll(checked_mul(coeffs_[i], factor));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::plus_constant(long long c) const {
  std::vector<long long> out = coeffs_;
  if (out.empty()) out.push_back(0);
  out[0] = to_ll(checked_add(out[0], c));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::composed_affine(long long inner_scale,
                                       long long inner_shift) const {
  // Horner on the polynomial level: result = result*(ax+b) + c_i.
  Polynomial result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<long long> next(result.coeffs_.size() + 1, 0);
    for (std::size_t i = 0; i < result.coeffs_.size(); ++i) {
      next[i + 1] = to_ll(checked_add(next[i + 1],
                                      checked_mul(result.coeffs_[i], inner_scale)));
      next[i] = to_ll(checked_add(next[i],
                                  checked_mul(result.coeffs_[i], inner_shift)));
    }
    next[0] = to_ll(checked_add(next[0], *it));
    result = Polynomial(std::move(next));
  }
  return result;
}

Polynomial Polynomial::halved() const {
  std::vector<long long> out(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] % 2 != 0)
      throw consistency_error("halved(): coefficient " + std::to_string(i) +
                              " is odd in " + to_string());
    out[i] = coeffs_[i] / 2;
  }
  return Polynomial(std::move(out));
}

std::uint64_t Polynomial::cauchy_root_bound() const {
  if (degree() <= 0) return 0;
  long double lead = std::fabs(static_cast<long double>(coeffs_.back()));
  long double worst = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
    worst = std::max(worst, std::fabs(static_cast<long double>(coeffs_[i])));
  return static_cast<std::uint64_t>(worst / lead) + 2;
}

int Polynomial::parity_at(std::uint64_t x) const {
  int acc = 0;
  const int xp = static_cast<int>(x & 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int cp = static_cast<int>(((coeffs_[i] % 2) + 2) % 2);
    acc ^= (i == 0 ? cp : cp & xp);
  }
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    long long c = coeffs_[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const long long a = std::llabs(c);
    if (i == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace arboreal
