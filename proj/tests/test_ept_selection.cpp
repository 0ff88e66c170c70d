#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epgap/ept.hpp"

using namespace epgap;

namespace {

Placement build(const PartitionShape& s, std::initializer_list<std::array<std::uint64_t, 3>> at) {
  Placement p(s);
  for (auto [nu, mu, lambda] : at) p.place(nu, mu, lambda);
  return p;
}

} // namespace

TEST_CASE("toy selection picks the first full column") {
  const auto s = toy_shape(3, 2, 2, 2);
  const auto p = build(s, {{0, 0, 1}, {1, 0, 2}, {1, 1, 1}, {2, 0, 1}, {2, 1, 2}});
  CHECK(p.prime_indices() == std::vector<std::uint64_t>{1, 6, 7, 9, 12});
  CHECK(p.column_counts() == std::vector<std::uint64_t>{1, 2, 2});
  const auto out = select_peak(p);
  REQUIRE(out.ok());
  CHECK(out.failure == SelectionFailure::None);
  CHECK(out.selection->column == 1);
  CHECK(out.selection->index == 7);
  CHECK(out.selection->predecessors == std::vector<std::uint64_t>{6});
  CHECK(out.selection->successors == std::vector<std::uint64_t>{9, 12});
}

TEST_CASE("selection failures") {
  const auto s = toy_shape(3, 2, 2, 2);
  auto out = select_peak(build(s, {{0, 0, 1}, {1, 1, 1}, {2, 0, 2}}));
  CHECK_FALSE(out.ok());
  CHECK(out.failure == SelectionFailure::NoColumn);
  CHECK(to_string(out.failure) == "no-column");

  out = select_peak(build(s, {{0, 0, 1}, {1, 1, 1}, {2, 0, 2}, {2, 1, 1}}));
  CHECK(out.failure == SelectionFailure::InsufficientSuccessors);
  CHECK(to_string(out.failure) == "insufficient-successors");

  out = select_peak(build(s, {{1, 0, 1}, {1, 1, 1}, {2, 0, 2}}));
  CHECK(out.failure == SelectionFailure::InsufficientSuccessors);

  CHECK(select_peak(Placement(s)).failure == SelectionFailure::NoColumn);
}

TEST_CASE("malformed placements throw") {
  const auto s = toy_shape(3, 2, 2, 2);
  Placement p(s);
  p.place(0, 0, 1);
  CHECK_THROWS_AS(p.place(0, 0, 2), std::logic_error);
  CHECK_THROWS_AS(p.place(3, 0, 1), std::logic_error);
  CHECK_THROWS_AS(p.place(0, 2, 1), std::logic_error);
  CHECK_THROWS_AS(p.place(0, 1, 0), std::logic_error);
  CHECK_THROWS_AS(p.place(0, 1, 3), std::logic_error);
  CHECK_THROWS_AS(p.place_index(13), std::logic_error);
  CHECK_THROWS_AS(Placement::from_indices(s, {1, 2}), std::logic_error);
  CHECK(Placement::from_indices(s, {1, 3, 12}).occupied_count() == 3);
}

TEST_CASE("pigeonhole bounds") {
  auto r = pigeonhole_bounds(3);
  CHECK(r.required == 154);
  CHECK(r.no_column_bound == 93);
  CHECK(r.no_column_sharp == 62);
  CHECK(r.split_bound == 139);
  CHECK(r.ok());
  r = pigeonhole_bounds(2);
  CHECK(r.required == 92);
  CHECK(r.no_column_bound == 62);
  CHECK(r.split_bound == 77);
  CHECK(r.ok());
  for (std::uint64_t L = 2; L <= 300; ++L) CHECK(pigeonhole_bounds(L).ok());
  CHECK_THROWS_AS(pigeonhole_bounds(1), std::invalid_argument);
  CHECK(occupancy_bound(derive_params(1).shape()) == 140);
  CHECK(occupancy_bound(toy_shape(3, 2, 2, 2)) == 5);
}

TEST_CASE("occupancy bound is tight at ell = 1") {
  const auto p = derive_params(1);
  const auto s = p.shape();
  // L-1 primes in each early column, the rest piled into the last one.
  Placement bad(s);
  for (std::uint64_t nu = 0; nu < 30; ++nu)
    for (std::uint64_t mu = 0; mu < 2; ++mu) bad.place(nu, mu, 1);
  for (std::uint64_t mu = 0; mu < p.J; ++mu) bad.place(30, mu, 1);
  CHECK(bad.occupied_count() == 139);
  CHECK(select_peak(bad).failure == SelectionFailure::InsufficientSuccessors);

  for (std::uint64_t nu = 0; nu < 30; ++nu) {
    Placement good = bad;
    good.place(nu, 2, 1);
    CHECK(good.occupied_count() == 140);
    const auto out = select_peak(good);
    REQUIRE(out.ok());
    CHECK(out.selection->column == nu);
  }

  // Spread variant: L-1 per column everywhere is 62 and finds no column.
  Placement spread(s);
  for (std::uint64_t nu = 0; nu < 31; ++nu)
    for (std::uint64_t mu = 0; mu < 2; ++mu) spread.place(nu, mu, 1);
  CHECK(select_peak(spread).failure == SelectionFailure::NoColumn);
}

TEST_CASE("claims on a hand-built toy with exact exponents") {
  // C=3, J=3, K=1, L=3: k = 18 and c(i) * 18 per index is
  //   column 0: 7 8 9, column 1: 4 5 6, column 2: 1 2 3.
  const auto s = toy_shape(3, 3, 1, 3);
  const ExponentModel model(s);
  const std::int64_t table[] = {7, 8, 9, 4, 5, 6, 1, 2, 3};
  for (std::uint64_t i = 1; i <= 9; ++i) CHECK(model.exponent(i) == Rational(table[i - 1], 18));

  const auto p = Placement::from_indices(s, {4, 5, 6, 7, 8, 9});
  const auto out = select_peak(p);
  REQUIRE(out.ok());
  CHECK(out.selection->index == 6);
  CHECK(out.selection->predecessors == std::vector<std::uint64_t>{5, 4});
  const auto claims = check_claims(*out.selection, model);
  REQUIRE(claims.left.size() == 1);
  const auto& l = claims.left[0];
  CHECK(l.first_gap == std::pair<std::uint64_t, std::uint64_t>{5, 6});
  CHECK(l.second_gap == std::pair<std::uint64_t, std::uint64_t>{4, 5});
  CHECK(l.first_exponent == Rational(6, 18));
  CHECK(l.second_exponent == Rational(5, 18));
  CHECK(l.difference == Rational(1, 18));
  CHECK(l.required == Rational(1, 18));
  CHECK(l.holds);
  REQUIRE(claims.right.size() == 1);
  CHECK(claims.right[0].second_exponent == Rational(1, 18));
  CHECK(claims.right[0].difference == Rational(5, 18));
  CHECK_FALSE(claims.right[0].crosses_column_tail);
  CHECK(claims.left_holds());
  CHECK(claims.right_holds());
}

TEST_CASE("right claim fails when the successor gap spans the column tail") {
  // C=3, J=3, K=2, L=3: column 1 holds indices 7..12 with c * 36 = i.
  const auto s = toy_shape(3, 3, 2, 3);
  const ExponentModel model(s);
  for (std::uint64_t i = 7; i <= 12; ++i)
    CHECK(model.exponent(i) == Rational(static_cast<std::int64_t>(i), 36));
  const auto p = Placement::from_indices(s, {7, 9, 11, 13, 15, 17});
  const auto out = select_peak(p);
  REQUIRE(out.ok());
  CHECK(out.selection->index == 11);
  const auto claims = check_claims(*out.selection, model);
  REQUIRE(claims.left.size() == 1);
  CHECK(claims.left[0].difference == Rational(2, 36));
  CHECK(claims.left_holds());
  REQUIRE(claims.right.size() == 1);
  const auto& r = claims.right[0];
  CHECK(r.second_gap == std::pair<std::uint64_t, std::uint64_t>{11, 13});
  CHECK(r.second_exponent == Rational(12, 36));
  CHECK(r.difference == Rational(-1, 36));
  CHECK_FALSE(r.holds);
  CHECK(r.crosses_column_tail);
  CHECK_FALSE(claims.right_holds());
}

TEST_CASE("left claim count is ell(ell+1)/2") {
  for (std::uint64_t L : {3, 4, 5}) {
    const auto s = toy_shape(3, L, 1, L);
    const ExponentModel model(s);
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = L + 1; i <= 3 * L; ++i) idx.push_back(i);
    const auto out = select_peak(Placement::from_indices(s, idx));
    REQUIRE(out.ok());
    const auto claims = check_claims(*out.selection, model);
    const auto ell = L - 2;
    CHECK(claims.left.size() == ell * (ell + 1) / 2);
    CHECK(claims.left_holds());
  }
}

TEST_CASE("claims are deterministic") {
  const auto p = derive_params(1);
  const ExponentModel model(p);
  std::vector<std::uint64_t> idx;
  for (std::uint64_t i = 1; i <= 2449; i += 13) idx.push_back(i);
  const auto place = Placement::from_indices(p.shape(), idx);
  const auto a = check_claims(*select_peak(place).selection, model);
  const auto b = check_claims(*select_peak(place).selection, model);
  REQUIRE(a.right.size() == b.right.size());
  for (std::size_t t = 0; t < a.right.size(); ++t) {
    CHECK(a.right[t].difference == b.right[t].difference);
    CHECK(a.right[t].holds == b.right[t].holds);
  }
  CHECK(a.left_holds());
}
