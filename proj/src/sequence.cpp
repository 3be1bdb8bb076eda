#include "arboreal/sequence.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace arboreal {

namespace {

using u64 = std::uint64_t;

std::vector<long long> parse_ll_list(std::string_view body, const char* what) {
  std::vector<long long> out;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view tok = body.substr(0, comma);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument(std::string("bad ") + what + " entry: '" +
                                  std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + " list is empty");
  return out;
}

std::string join_ll(const std::vector<long long>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s;
}

}  // namespace

IncrementSequence::IncrementSequence(Kind kind, Polynomial poly,
                                     std::vector<u64> terms, std::string spec)
    : kind_(kind), poly_(std::move(poly)), terms_(std::move(terms)),
      spec_(std::move(spec)) {}

IncrementSequence IncrementSequence::naturals() {
  return {Kind::naturals, Polynomial({0, 1}), {}, "naturals"};
}

IncrementSequence IncrementSequence::squares() {
  return {Kind::squares, Polynomial({0, 0, 1}), {}, "squares"};
}

IncrementSequence IncrementSequence::cubes() {
  return {Kind::cubes, Polynomial({0, 0, 0, 1}), {}, "cubes"};
}

IncrementSequence IncrementSequence::odds() {
  return {Kind::odds, Polynomial({-1, 2}), {}, "odds"};
}

IncrementSequence IncrementSequence::polynomial(std::vector<long long> coefficients,
                                                u64 positivity_scan) {
  Polynomial f{std::vector<long long>(coefficients)};
  if (f.degree() < 0)
    throw std::domain_error("polynomial sequence: the zero polynomial has no positive terms");
  if (f.degree() > 0 && f.leading() < 0)
    throw std::domain_error("polynomial sequence: negative leading coefficient");
  const Polynomial f_minus_one = f.plus_constant(-1);
  u64 scan_to = positivity_scan;
  if (f.degree() > 0)
    scan_to = std::max(scan_to, f_minus_one.cauchy_root_bound());
  for (u64 j = 1; j <= scan_to; ++j) {
    if (f.eval(j) < 1)
      throw std::domain_error("polynomial sequence: term at j = " +
                              std::to_string(j) + " is below 1");
  }
  return {Kind::polynomial, std::move(f), {}, "poly:" + join_ll(coefficients)};
}

IncrementSequence IncrementSequence::explicit_list(std::vector<u64> terms) {
  if (terms.empty())
    throw std::domain_error("explicit sequence: needs at least one term");
  std::string spec = "list:";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] < 1)
      throw std::domain_error("explicit sequence: term at j = " +
                              std::to_string(i + 1) + " is below 1");
    if (i) spec += ',';
    spec += std::to_string(terms[i]);
  }
  return {Kind::explicit_list, Polynomial{}, std::move(terms), std::move(spec)};
}

IncrementSequence IncrementSequence::parse(std::string_view spec) {
  if (spec == "naturals") return naturals();
  if (spec == "squares") return squares();
  if (spec == "cubes") return cubes();
  if (spec == "odds") return odds();
  if (spec.starts_with("poly:"))
    return polynomial(parse_ll_list(spec.substr(5), "poly coefficient"));
  if (spec.starts_with("list:")) {
    std::vector<u64> terms;
    for (long long v : parse_ll_list(spec.substr(5), "list")) {
      if (v < 1) throw std::invalid_argument("list terms must be positive");
      terms.push_back(static_cast<u64>(v));
    }
    return explicit_list(std::move(terms));
  }
  throw std::invalid_argument("unknown sequence spec '" + std::string(spec) +
                              "' (expected naturals|squares|cubes|odds|poly:...|list:...)");
}

std::uint64_t IncrementSequence::term(u64 j) const {
  if (j == 0) throw std::out_of_range("sequence index starts at 1");
  if (kind_ == Kind::explicit_list) {
    if (j > terms_.size())
      throw std::out_of_range("explicit sequence has only " +
                              std::to_string(terms_.size()) + " terms");
    return terms_[j - 1];
  }
  return poly_.eval_u64(j);
}

std::optional<std::uint64_t> IncrementSequence::term_count() const {
  if (kind_ == Kind::explicit_list) return terms_.size();
  return std::nullopt;
}

const Polynomial* IncrementSequence::polynomial_form() const {
  if (kind_ == Kind::explicit_list) return nullptr;
  return &poly_;
}

}  // namespace arboreal
