#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "arboreal/polynomial.hpp"
#include "arboreal/scoreboard.hpp"
#include "arboreal/sequence.hpp"

namespace arboreal {

// Closed-form pruning bounds for the partial evaluations of the positive
// integers and the perfect squares.
std::uint64_t bound_naturals(std::uint64_t k);  // 2k+4 odd k, 3k+6 even k
std::uint64_t bound_squares(std::uint64_t k);   // 2k^2+14k+40 odd, 3k^2+20k+57 even

// One verified inequality of the two-step induction. `pointwise_ok` covers
// the exact integer scan; `tail_ok` extends it to every larger index via the
// sign of the leading coefficient plus a Cauchy root bound per parity class.
struct InequalityCheck {
  std::string name;
  bool pointwise_ok = false;
  std::uint64_t scanned_from = 0;
  std::uint64_t scanned_to = 0;
  std::uint64_t first_failure = 0;  // index of first failing k, 0 when none
  bool tail_ok = false;
  std::string tail_note;

  bool ok() const { return pointwise_ok && tail_ok; }
};

struct ValidationEvidence {
  Polynomial increments;
  Polynomial odd_bound;
  Polynomial even_bound;
  std::uint64_t horizon = 0;
  std::vector<InequalityCheck> checks;

  bool all_ok() const;
};

// Verifies that the pair (odd_bound at odd heights, even_bound at even
// heights) dominates every partial evaluation of the sequence with closed
// form f. Mirrors the downward two-parity induction: the even-height bound
// must absorb one increment-plus-phi step from the odd one, and the odd
// bound two steps lower must absorb the halving step, with the even-or-one
// image of phi supplying the parity tightenings. Requires f(even) even.
ValidationEvidence check_polynomial_bound_pair(const Polynomial& f,
                                               const Polynomial& odd_bound,
                                               const Polynomial& even_bound,
                                               std::uint64_t horizon = 10'000);

class BoundProvider {
 public:
  enum class Kind { naturals, squares, generic_polynomial, unbounded };

  static BoundProvider naturals();
  static BoundProvider squares();
  static BoundProvider none();
  static BoundProvider from_polynomials(
      Polynomial odd_bound, Polynomial even_bound,
      std::shared_ptr<const ValidationEvidence> evidence = nullptr);

  Kind kind() const { return kind_; }
  bool unbounded() const { return kind_ == Kind::unbounded; }
  std::uint64_t at(std::uint64_t k) const;  // b_k; UINT64_MAX when unbounded
  const ValidationEvidence* evidence() const { return evidence_.get(); }
  const Polynomial* odd_polynomial() const;
  const Polynomial* even_polynomial() const;
  std::string describe() const;

 private:
  explicit BoundProvider(Kind kind) : kind_(kind) {}

  Kind kind_;
  Polynomial odd_;
  Polynomial even_;
  std::shared_ptr<const ValidationEvidence> evidence_;
};

// Searches a bound pair for a polynomial increment sequence by analogy with
// the degree-1 and degree-2 cases: odd leading coefficient 2*cd, even 3*cd,
// lower coefficients solved so the induction margins vanish, and the
// constant term grown until every check passes. The returned provider
// carries the full evidence. Throws derivation_error when the sequence has
// no polynomial form, is odd-valued at even indices, or no constant within
// the search window passes.
BoundProvider derive_polynomial_bound(const IncrementSequence& seq,
                                      std::uint64_t horizon = 10'000);

struct BoundViolation {
  std::uint64_t n;
  std::uint64_t k;
  std::uint64_t value;
  std::uint64_t bound;

  friend bool operator==(const BoundViolation&, const BoundViolation&) = default;
};

// Scans every trace for n <= n_max and reports each partial evaluation that
// exceeds the provider. Empty result means the bound held everywhere tested.
std::vector<BoundViolation> validate_bound_empirically(
    const IncrementSequence& seq, const BoundProvider& bound,
    std::uint64_t n_max, const EvalOptions& options = {});

}  // namespace arboreal
