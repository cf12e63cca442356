#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace radokit;
using namespace radokit::testing;

namespace {

// Exhaustive enumeration of [-r, r]^n.
bool brute_has_solution(const DkSystem& s, const Coloring& chi, std::int64_t r) {
  const auto order = s.variable_order();
  const std::size_t n = order.size();
  std::vector<std::int64_t> z(n, -r);
  for (;;) {
    Assignment a;
    a.values.resize(s.groups());
    for (std::size_t v = 0; v < n; ++v) a.values[order[v].group].push_back(z[v]);
    if (naive_is_semi_monochromatic(s, a, [&](std::int64_t x) { return chi(x); })) return true;
    std::size_t pos = 0;
    while (pos < n && z[pos] == r) z[pos++] = -r;
    if (pos == n) return false;
    ++z[pos];
  }
}

}  // namespace

TEST_SUITE("solution_search") {
  TEST_CASE("worked example under the divisible-by-three coloring") {
    const Coloring chi = divisible_by_three(10);
    const auto r = find_semi_mono_solution(paper_system(), chi, 10);
    REQUIRE(r.outcome == SearchResult::Outcome::found);
    CHECK(is_semi_monochromatic(paper_system(), r.witness, chi));
    CHECK(naive_is_semi_monochromatic(paper_system(), r.witness, [&](std::int64_t x) { return chi(x); }));
    CHECK(r.group_colors.size() == 2);
  }

  TEST_CASE("Schur under smod 2") {
    const auto r = find_semi_mono_solution(schur_system(), Coloring::smod(2), 5);
    REQUIRE(r.outcome == SearchResult::Outcome::found);
    CHECK(is_semi_monochromatic(schur_system(), r.witness, Coloring::smod(2)));
  }

  TEST_CASE("sign coloring kills x1 + x2 = 0") {
    const DkSystem s(1, {{iv({1}), iv({1})}});
    const Coloring sign = Coloring::from_function(-8, 8, [](std::int64_t z) { return z > 0 ? 1 : (z < 0 ? 2 : 0); });
    CHECK(find_semi_mono_solution(s, sign, 8).outcome == SearchResult::Outcome::not_found);
    CHECK_THROWS_AS(find_semi_mono_solution(s, sign, 9), ColoringDomainError);
  }

  TEST_CASE("budget exhaustion is reported") {
    const auto r = find_semi_mono_solution(x_plus_y_eq_3z(), Coloring::smod(5), 60, 10);
    CHECK(r.outcome == SearchResult::Outcome::budget_exhausted);
  }

  TEST_CASE("search is exhaustive on small windows") {
    std::mt19937_64 rng(0xAB);
    for (int trial = 0; trial < 120; ++trial) {
      const DkSystem s = random_system(rng, 2, 2, 4, 3);
      const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % 2);
      std::vector<Color> colors;
      for (std::int64_t z = -r; z <= r; ++z) colors.push_back(static_cast<Color>(rng() % 3));
      const Coloring chi = Coloring::table(-r, r, colors);
      const auto got = find_semi_mono_solution(s, chi, r);
      REQUIRE(got.outcome != SearchResult::Outcome::budget_exhausted);
      REQUIRE((got.outcome == SearchResult::Outcome::found) == brute_has_solution(s, chi, r));
      if (got.outcome == SearchResult::Outcome::found) REQUIRE(is_semi_monochromatic(s, got.witness, chi));
    }
  }

  TEST_CASE("window monotonicity and determinism") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
      const DkSystem s = random_system(rng, 2, 3, 4, 3);
      const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
      const auto small = find_semi_mono_solution(s, Coloring::smod(p), 6);
      const auto again = find_semi_mono_solution(s, Coloring::smod(p), 6);
      REQUIRE(small.outcome == again.outcome);
      REQUIRE(small.witness == again.witness);
      if (small.outcome == SearchResult::Outcome::found)
        REQUIRE(find_semi_mono_solution(s, Coloring::smod(p), 12).outcome == SearchResult::Outcome::found);
    }
  }

  TEST_CASE("falsification reports") {
    const auto neg = falsify_semi_regularity(x_plus_y_eq_3z(), {5}, 60);
    REQUIRE(neg.entries.size() == 1);
    CHECK(neg.entries[0].prime == 5);
    for (const auto& e : neg.entries)
      if (e.result.outcome == SearchResult::Outcome::found)
        CHECK(is_semi_monochromatic(x_plus_y_eq_3z(), e.result.witness, Coloring::smod(5)));

    const auto pos = falsify_semi_regularity(paper_system(), primes_up_to(13), 100, 10'000'000, 2);
    CHECK(pos.primes_without_witness().empty());
    CHECK(pos.primes_with_witness() == primes_up_to(13));

    CHECK(falsify_semi_regularity(paper_system(), {}, 10).entries.empty());
    CHECK_THROWS_AS(falsify_semi_regularity(paper_system(), {4}, 10), InputError);
  }

  TEST_CASE("parallel falsification matches the sequential run") {
    const DkSystem s = x_plus_y_eq_3z();
    const auto seq = falsify_semi_regularity(s, primes_up_to(19), 30, 10'000'000, 1);
    const auto par = falsify_semi_regularity(s, primes_up_to(19), 30, 10'000'000, 4);
    REQUIRE(seq.entries.size() == par.entries.size());
    for (std::size_t i = 0; i < seq.entries.size(); ++i) {
      CHECK(seq.entries[i].prime == par.entries[i].prime);
      CHECK(seq.entries[i].result.outcome == par.entries[i].result.outcome);
      CHECK(seq.entries[i].result.witness == par.entries[i].result.witness);
    }
  }

  TEST_CASE("semi-Rado numbers at toy scale") {
    const auto schur = semi_rado_number(schur_system(), 1, 3);
    REQUIRE(schur.value.has_value());
    CHECK(*schur.value == 1);

    const DkSystem opposite(1, {{iv({1}), iv({1})}});
    const auto none = semi_rado_number(opposite, 2, 3);
    CHECK_FALSE(none.value.has_value());
    REQUIRE(none.avoiding_colorings.size() == 3);
    for (std::size_t i = 0; i < none.avoiding_colorings.size(); ++i) {
      const auto r = static_cast<std::int64_t>(i + 1);
      CHECK_FALSE(brute_has_solution(opposite, none.avoiding_colorings[i], r));
    }

    const auto single = semi_rado_number(x_plus_y_eq_3z(), 1, 2);
    REQUIRE(single.value.has_value());
    CHECK(*single.value == 1);  // 1 + (-1) = 3 * 0

    const auto two = semi_rado_number(schur_system(), 2, 4);
    REQUIRE(two.avoiding_colorings.size() == static_cast<std::size_t>(two.value ? *two.value - 1 : 4));
    for (std::size_t i = 0; i < two.avoiding_colorings.size(); ++i)
      CHECK_FALSE(brute_has_solution(schur_system(), two.avoiding_colorings[i], static_cast<std::int64_t>(i + 1)));

    CHECK_THROWS_AS(semi_rado_number(schur_system(), 3, 12, 1000), InfeasibleError);
  }

  TEST_CASE("colorings are enumerated up to renaming") {
    // Restricted growth strings of length 3 over 2 colors: 000, 001, 010, 011.
    const DkSystem equal(1, {{iv({1}), iv({-1})}});
    const auto r = semi_rado_number(equal, 2, 1);
    CHECK(r.colorings_checked == 4);
    CHECK(r.value == std::int64_t{1});

    const DkSystem impossible(1, {{iv({1})}});
    const auto stop = semi_rado_number(impossible, 2, 1);
    CHECK(stop.colorings_checked == 1);
    CHECK_FALSE(stop.value.has_value());
  }
}
