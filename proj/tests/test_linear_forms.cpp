#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epgap/linear_forms.hpp"
#include "epgap/sieve.hpp"

using namespace epgap;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::up_to(2'000'000);
  return t;
}

LinearForm random_zero_sum(std::mt19937_64& rng) {
  while (true) {
    const std::size_t k = 2 + rng() % 7;
    std::vector<std::int64_t> a(k);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      a[i] = static_cast<std::int64_t>(rng() % 11) - 5;
      sum += a[i];
    }
    a[k - 1] = -sum;
    if (a[k - 1] >= -5 && a[k - 1] <= 5) return LinearForm(a);
  }
}

} // namespace

TEST_CASE("alpha profile") {
  CHECK(alpha_profile(LinearForm({1, -1})).alpha == std::vector<std::int64_t>{1, 0});
  CHECK(alpha_profile(LinearForm({-1, 2, -1})).alpha == std::vector<std::int64_t>{-1, 1, 0});
  CHECK(alpha_profile(LinearForm({1, 0, -1})).alpha == std::vector<std::int64_t>{1, 1, 0});
  CHECK(alpha_profile(LinearForm({1, 2})).last() == 3);
  CHECK_THROWS_AS(LinearForm({1}), std::invalid_argument);
}

TEST_CASE("first differencing inverts the profile") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::int64_t> a(2 + rng() % 7);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 21) - 10;
    const LinearForm f(a);
    const LinearForm back = form_from_profile(alpha_profile(f));
    CHECK(std::vector<std::int64_t>(back.coefficients().begin(), back.coefficients().end()) == a);
  }
}

TEST_CASE("classification") {
  auto c = classify(LinearForm({1, -1}));
  CHECK(c.kind == FormClass::OneSigned);
  CHECK(c.alpha_sign == 1);
  CHECK(c.predicted_sign() == -1);
  CHECK_FALSE(c.erdos_easy);

  // alpha = (-1, 1, 0): mixed, and -1 + 1 = 0 with alpha_2 = 1.
  c = classify(LinearForm({-1, 2, -1}));
  CHECK(c.kind == FormClass::MixedSign);
  CHECK(c.erdos_easy);

  c = classify(LinearForm({2, -1, -1}));
  CHECK(c.kind == FormClass::OneSigned);
  CHECK(alpha_profile(LinearForm({2, -1, -1})).alpha == std::vector<std::int64_t>{2, 1, 0});

  c = classify(LinearForm({1, 1}));
  CHECK(c.kind == FormClass::NotZeroSum);

  c = classify(LinearForm({0, 0, 0}));
  CHECK(c.kind == FormClass::OneSigned);
  CHECK(c.degenerate);

  // Zeros among the alphas do not break one-signedness.
  c = classify(LinearForm({0, 1, -1, 0}));
  CHECK(c.kind == FormClass::OneSigned);
  CHECK(c.alpha_sign == 1);
}

TEST_CASE("erdos_easy implies mixed sign") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const auto c = classify(random_zero_sum(rng));
    if (c.erdos_easy) CHECK(c.kind == FormClass::MixedSign);
  }
}

TEST_CASE("direct evaluation") {
  const auto p = table().primes();
  CHECK(evaluate_direct(LinearForm({1, -1}), 1, p) == -2);
  CHECK(evaluate_direct(LinearForm({1, -2, 1}), 1, p) == 0);
  CHECK(evaluate_direct(LinearForm({0, 0}), 17, p) == 0);
  CHECK(evaluate_direct(LinearForm({1, 1}), 1, p) == 8); // not zero-sum is fine
  const std::vector<std::uint64_t> few{2, 3, 5};
  CHECK_THROWS_AS(evaluate_direct(LinearForm({1, -1}), 2, few), std::range_error);
  CHECK_THROWS_AS(evaluate_direct(LinearForm({1, -1}), 0, few), std::range_error);
}

TEST_CASE("gap-form evaluation") {
  const auto gaps = table().gaps();
  CHECK(evaluate_gap_form(alpha_profile(LinearForm({1, -1})), 1, gaps) == -2);
  CHECK(evaluate_gap_form(alpha_profile(LinearForm({1, -2, 1})), 1, gaps) == 0);
  CHECK_THROWS_AS(evaluate_gap_form(alpha_profile(LinearForm({1, 1})), 1, gaps), std::logic_error);

  // Constant gaps: alpha_1 + alpha_2 = 1 - 1 = 0 for a = (1, -2, 1).
  const std::vector<std::uint64_t> flat(50, 6);
  const GapView synthetic(flat);
  for (std::uint64_t n = 1; n <= 40; ++n)
    CHECK(evaluate_gap_form(alpha_profile(LinearForm({1, -2, 1})), n, synthetic) == 0);
}

TEST_CASE("direct and gap-form agree on random zero-sum forms") {
  std::mt19937_64 rng(2024);
  const auto p = table().primes();
  const auto gaps = table().gaps();
  for (int t = 0; t < 1000; ++t) {
    const LinearForm f = random_zero_sum(rng);
    const std::uint64_t n = 1 + rng() % 10'000;
    REQUIRE(evaluate_direct(f, n, p) == evaluate_gap_form(alpha_profile(f), n, gaps));
  }
}

TEST_CASE("sign-change counting treats zeros as transparent") {
  const std::vector<std::int64_t> v{3, 0, -1, 0, 0, -2, 5, 0, 5, -1};
  const auto r = count_sign_changes(v, 10);
  CHECK(r.count == 3);
  CHECK(r.positions == std::vector<std::uint64_t>{12, 16, 19});
  CHECK(r.zeros == 4);
  CHECK(count_sign_changes(std::vector<std::int64_t>{}, 0).count == 0);
  CHECK(count_sign_changes(std::vector<std::int64_t>{-4}, 0).count == 0);
}

TEST_CASE("sign changes on real primes") {
  const auto p = table().primes();
  CHECK(count_sign_changes(LinearForm({1, -1}), 2, 10'000, p).count == 0);
  // Brute-force values from an independent sympy enumeration.
  const LinearForm et({-1, 2, -1});
  const auto r3 = count_sign_changes(et, 2, 1'000, p);
  CHECK(r3.count == 655);
  CHECK(std::vector<std::uint64_t>(r3.positions.begin(), r3.positions.begin() + 5) ==
        std::vector<std::uint64_t>{3, 4, 5, 6, 8});
  CHECK(count_sign_changes(et, 2, 10'000, p).count == 6569);
  CHECK(count_sign_changes(et, 2, 2, p).count == 0);
  CHECK(count_sign_changes(et, 5, 4, p).count == 0);
  CHECK_THROWS_AS(count_sign_changes(LinearForm({1, 1}), 2, 10, p), std::logic_error);
}

TEST_CASE("sign-change count is monotone under range extension") {
  const auto p = table().primes();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const LinearForm f = random_zero_sum(rng);
    std::uint64_t prev = 0;
    for (std::uint64_t last : {10, 100, 1000, 5000}) {
      const auto c = count_sign_changes(f, 2, last, p).count;
      CHECK(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("one-signed forms keep their predicted sign") {
  const auto p = table().primes();
  for (const auto& a : std::vector<std::vector<std::int64_t>>{{1, -1}, {2, -1, -1}, {-1, 0, 1}, {0, 3, -3}}) {
    const LinearForm f(a);
    const auto c = classify(f);
    REQUIRE(c.kind == FormClass::OneSigned);
    for (std::uint64_t n = 2; n <= 2000; ++n) {
      const auto v = evaluate_direct(f, n, p);
      CHECK((v > 0) - (v < 0) == c.predicted_sign());
    }
  }
}

TEST_CASE("integer list parsing") {
  CHECK(parse_integer_list("1,-2, 1") == std::vector<std::int64_t>{1, -2, 1});
  CHECK(parse_integer_list("+3") == std::vector<std::int64_t>{3});
  CHECK_THROWS_AS(parse_integer_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer_list("1,x"), std::invalid_argument);
}
