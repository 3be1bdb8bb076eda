#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arboreal/polynomial.hpp"

namespace arboreal {

// The increment sequence a_1, a_2, a_3, ... feeding a scoreboard iteration.
// Immutable after construction; every term is >= 1. Generated kinds are
// unbounded until 64-bit overflow, which raises std::overflow_error; the
// explicit kind is finite and raises std::out_of_range past its end.
class IncrementSequence {
 public:
  enum class Kind { naturals, squares, cubes, odds, polynomial, explicit_list };

  static IncrementSequence naturals();
  static IncrementSequence squares();
  static IncrementSequence cubes();
  static IncrementSequence odds();

  // Coefficients ascend by degree: f(j) = c0 + c1*j + ... + cd*j^d.
  // Rejected (std::domain_error, naming the offending index) unless
  // f(j) >= 1 for every j >= 1; positivity is established by scanning to
  // max(positivity_scan, Cauchy root bound of f - 1), beyond which the sign
  // of the leading coefficient rules.
  static IncrementSequence polynomial(std::vector<long long> coefficients,
                                      std::uint64_t positivity_scan = 10'000);

  static IncrementSequence explicit_list(std::vector<std::uint64_t> terms);

  // CLI syntax: naturals|squares|cubes|odds|poly:c0,c1,...,cd|list:a1,a2,...
  // Throws std::invalid_argument on malformed specs.
  static IncrementSequence parse(std::string_view spec);

  std::uint64_t term(std::uint64_t j) const;  // 1-based
  std::optional<std::uint64_t> term_count() const;

  Kind kind() const { return kind_; }
  const std::string& spec_string() const { return spec_; }

  // Closed form as a polynomial in j; nullptr for explicit lists.
  const Polynomial* polynomial_form() const;

 private:
  IncrementSequence(Kind kind, Polynomial poly, std::vector<std::uint64_t> terms,
                    std::string spec);

  Kind kind_;
  Polynomial poly_;
  std::vector<std::uint64_t> terms_;
  std::string spec_;
};

}  // namespace arboreal
