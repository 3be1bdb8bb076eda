#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "arboreal/emit.hpp"
#include "arboreal/stats.hpp"

using namespace arboreal;
using u64 = std::uint64_t;

TEST_CASE("tree size profiles") {
  const auto nat = IncrementSequence::naturals();
  const auto t6 = grow_tree(6, nat, BoundProvider::naturals(), {100, 1'000'000});
  const auto profile = tree_size_profile(t6);
  const std::vector<std::pair<u64, u64>> expected{{0, 1}, {1, 1}, {2, 3},
                                                  {3, 1}, {4, 2}, {5, 1},
                                                  {6, 0}};
  CHECK(profile == expected);
  CHECK(profile.front() == std::pair<u64, u64>{0, 1});

  const auto sq = IncrementSequence::squares();
  const auto t22 = grow_tree(22, sq, BoundProvider::squares(), {200, 2'000'000});
  const auto p22 = tree_size_profile(t22);
  CHECK(p22.back().second == 0);
  CHECK(p22.back().first > 100);
}

TEST_CASE("both counting modes coincide") {
  const auto nat = IncrementSequence::naturals();
  const auto t4 = grow_tree(4, nat, BoundProvider::naturals(), {40, 1'000'000});
  CHECK(tree_size_profile(t4, nat, CountMode::path_multiplicity) ==
        tree_size_profile(t4, nat, CountMode::distinct_values));

  const auto sq = IncrementSequence::squares();
  const auto t16 = grow_tree(16, sq, BoundProvider::squares(), {30, 1'000'000});
  CHECK(tree_size_profile(t16, sq, CountMode::path_multiplicity) ==
        tree_size_profile(t16, sq, CountMode::distinct_values));
}

TEST_CASE("canopy shares account for every node and isolate the late pair") {
  const auto forest = grow_forest(IncrementSequence::squares(),
                                  BoundProvider::squares(), {120, 2'000'000},
                                  {2, nullptr, 100});
  const auto canopy = canopy_density(forest);
  REQUIRE(canopy.size() > 100);

  CHECK(canopy[0].total == forest.trees.size());  // every root contributes one
  for (const auto& [root, count] : canopy[0].root_counts) CHECK(count == 1);

  for (const auto& level : canopy) {
    u64 sum = 0;
    for (const auto& [root, count] : level.root_counts) sum += count;
    CHECK(sum == level.total);
  }

  // Past the shorter trees only 16 and 22 keep canopy, and 22 is gone by 118.
  for (u64 h = 60; h <= 100; ++h) {
    for (const auto& [root, count] : canopy[h].root_counts)
      CHECK((root == 16 || root == 22));
  }
  for (u64 h = 118; h < canopy.size(); ++h) {
    REQUIRE(canopy[h].root_counts.size() == 1);
    CHECK(canopy[h].root_counts[0].first == 16);
  }
}

TEST_CASE("rolling shares: indicator window and saturation") {
  const std::vector<u64> vals{5, 5, 7, 5, 7};
  const auto rows = fruit_rolling_share(vals, 1);
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) {
    CHECK(row.count == 1);
    CHECK(row.window == 1);
    CHECK(row.value == vals[row.n - 1]);
  }

  const auto nat_rows =
      fruit_rolling_share(IncrementSequence::naturals(), 1000, 100);
  const auto at_1000 = std::find_if(nat_rows.begin(), nat_rows.end(),
                                    [](const RollingShareRow& r) {
                                      return r.n == 1000;
                                    });
  REQUIRE(at_1000 != nat_rows.end());
  CHECK(at_1000->value == 4);
  CHECK(at_1000->count == 100);  // share 1: the tail is all fours

  // Window counts always sum to the window.
  u64 sum = 0;
  for (const auto& row : nat_rows)
    if (row.n == 150) sum += row.count;
  CHECK(sum == 100);

  CHECK_THROWS_AS(fruit_rolling_share(vals, 0), std::domain_error);
  CHECK_THROWS_AS(fruit_rolling_share(vals, 6), std::domain_error);
}

TEST_CASE("value frequencies over the naturals") {
  const auto table = value_frequencies(IncrementSequence::naturals(), 100);
  REQUIRE(table.rows.size() == 3);
  const auto* one = table.find(1);
  REQUIRE(one != nullptr);
  CHECK(one->count == 2);
  CHECK(one->occurrences == std::vector<u64>{1, 2});
  CHECK(table.find(2)->occurrences == std::vector<u64>{3, 4});
  CHECK(table.find(4)->count == 96);

  u64 total = 0;
  for (const auto& row : table.rows) total += row.count;
  CHECK(total == table.n_max);
}

TEST_CASE("frequencies recount the scoreboard sequence") {
  const auto values = scoreboard_sequence(IncrementSequence::squares(), 200);
  const auto table = value_frequencies(values);
  for (const auto& row : table.rows) {
    u64 recount = 0;
    for (u64 v : values) recount += v == row.value;
    CHECK(recount == row.count);
  }
}

TEST_CASE("early cube rows match the published n-specific values") {
  const auto table = value_frequencies(IncrementSequence::cubes(), 20);
  CHECK(table.find(1)->occurrences == std::vector<u64>{1});
  CHECK(table.find(4)->occurrences == std::vector<u64>{2});
  CHECK(table.find(12)->occurrences == std::vector<u64>{3, 4});
  CHECK(table.find(40)->occurrences == std::vector<u64>{6});
  CHECK(table.find(156)->occurrences == std::vector<u64>{9});
  CHECK(table.find(110)->occurrences == std::vector<u64>{13});
}

TEST_CASE("csv emission carries exact headers and sums") {
  const auto table = value_frequencies(IncrementSequence::naturals(), 10);
  std::ostringstream freq;
  write_frequency_csv(freq, table);
  CHECK(freq.str().rfind("value,count,share\n", 0) == 0);

  std::ostringstream rolling;
  write_rolling_csv(rolling, fruit_rolling_share(IncrementSequence::naturals(), 10, 2));
  CHECK(rolling.str().rfind("n,value,share\n", 0) == 0);

  const auto forest = grow_forest(IncrementSequence::naturals(),
                                  BoundProvider::naturals(), {20, 100'000});
  std::ostringstream canopy;
  write_canopy_csv(canopy, canopy_density(forest));
  CHECK(canopy.str().rfind("height,root,count,share\n", 0) == 0);
}
