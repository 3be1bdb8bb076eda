// Non-binding benchmark: times fiber enumeration in ascending vs descending
// divisor order and prints the ratios. Machine-dependent, so it never fails
// on timing; the enumerated sets themselves are compared.
//
// Descending wins because the early passes visit large primes whose
// candidates wash out of the divisibility test before the candidate list
// has grown; ascending order grows the list first and then drags it through
// every remaining prime. The gap widens with the divisor count of m.

#include <chrono>
#include <cstdio>

#include "arboreal/inverse_totient.hpp"

using namespace arboreal;
using u64 = std::uint64_t;

namespace {

int mismatches = 0;

void band(const char* label, u64 from, u64 to, u64 step) {
  u64 sum_desc = 0, sum_asc = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (u64 m = from; m <= to; m += step)
    for (u64 x : totient_fiber(m, DivisorOrder::descending).members) sum_desc += x;
  const auto t1 = std::chrono::steady_clock::now();
  for (u64 m = from; m <= to; m += step)
    for (u64 x : totient_fiber(m, DivisorOrder::ascending).members) sum_asc += x;
  const auto t2 = std::chrono::steady_clock::now();
  const double desc = std::chrono::duration<double>(t1 - t0).count();
  const double asc = std::chrono::duration<double>(t2 - t1).count();
  if (sum_desc != sum_asc) ++mismatches;
  std::printf("%-28s descending %.3fs, ascending %.3fs, asc/desc = %.2fx%s\n",
              label, desc, asc, desc > 0 ? asc / desc : 0.0,
              sum_desc == sum_asc ? "" : "  SETS DIFFER");
}

}  // namespace

int main() {
  band("fibers of 1..10^4:", 1, 10'000, 1);
  // Highly composite neighborhoods, the expensive regime in cube forests.
  band("fibers near 7.35e8:", 735'134'400, 735'134'480, 2);
  band("fibers near 9.64e11:", 963'761'198'400ull, 963'761'198'440ull, 2);
  return mismatches == 0 ? 0 : 1;
}
