#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arboreal {

// Integer-coefficient polynomial with exact evaluation and the few exact
// transforms the two-step bound induction needs. Coefficients ascend by
// degree. Arithmetic throws std::overflow_error instead of wrapping.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<long long> coefficients);

  static Polynomial monomial(unsigned degree, long long coefficient = 1);

  int degree() const;  // -1 for the zero polynomial
  long long leading() const;
  const std::vector<long long>& coefficients() const { return coeffs_; }
  long long coefficient(unsigned i) const;

  __int128 eval(__int128 x) const;
  std::uint64_t eval_u64(std::uint64_t x) const;  // throws if negative or too wide

  Polynomial plus(const Polynomial& other) const;
  Polynomial minus(const Polynomial& other) const;
  Polynomial scaled(long long factor) const;
  Polynomial plus_constant(long long c) const;

  // p(inner_scale * x + inner_shift), expanded exactly.
  Polynomial composed_affine(long long inner_scale, long long inner_shift) const;

  // Divides every coefficient by 2; throws consistency_error if any is odd.
  Polynomial halved() const;

  // 1 + max|c_i| / |c_d|, rounded up: no real root exceeds it. 0 for
  // constants.
  std::uint64_t cauchy_root_bound() const;

  // Value mod 2, which is periodic in x with period 2.
  int parity_at(std::uint64_t x) const;

  bool is_zero() const { return coeffs_.empty(); }
  std::string to_string(const std::string& var = "k") const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<long long> coeffs_;  // trailing zeros trimmed
  void trim();
};

}  // namespace arboreal
