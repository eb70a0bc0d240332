#include <memory>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qbelief/beliefs.hpp"

using namespace qbelief;

namespace {

constexpr Quality Z{0}, S{1}, M{2}, L{3};

ColumnBelief belief(std::vector<int> quarters, Quality believe) {
  return ColumnBelief::from_numerators(quarters, believe);
}

Action mv(int s, int d) { return Action(ColumnId(s), ColumnId(d)); }

void check_invariants(const ColumnBelief& cb) {
  const int g = cb.granularity();
  const auto nums = cb.numerators();
  CHECK(std::accumulate(nums.begin(), nums.end(), 0) == g);
  int lo = -1, hi = -1;
  for (int q = 0; q < g; ++q) {
    const Degree d = cb.degree(Quality{q});
    CHECK(d.granularity() == g);
    CHECK(d.numerator() >= 0);
    CHECK(d.numerator() <= g);
    if (d.numerator() > 0) {
      if (lo < 0) lo = q;
      hi = q;
    }
  }
  CHECK(hi - lo <= 1);
  CHECK(cb.degree(cb.believe()) >= Degree(1, 2));
}

}  // namespace

TEST_CASE("standard scale classification") {
  const auto scale = QualityScale::standard();
  CHECK(scale.granularity() == 4);
  CHECK(scale.classify(8) == M);
  CHECK(scale.classify(0) == Z);
  CHECK(scale.classify(14) == L);
  CHECK(scale.classify(1) == S);
  CHECK(scale.classify(9) == L);
  CHECK(scale.name(M) == "medium");
  CHECK(scale.find("large") == L);
  CHECK_FALSE(scale.find("huge").has_value());
  CHECK(QualityScale::uniform(4, 4) == scale);
  const auto six = QualityScale::uniform(6, 6);
  CHECK(six.bands().back().lo == 25);
  CHECK(six.bands().back().hi == 30);
}

TEST_CASE("band arrangements are validated with specific codes") {
  const auto code = [](std::vector<Band> b) {
    auto r = check_bands(b);
    return r ? r->first : ErrorCode::invalid_argument;  // invalid_argument stands for "valid" here
  };
  CHECK(code({{"z", 0, 0}, {"s", 1, 4}}) == ErrorCode::invalid_argument);
  CHECK(code({{"z", 0, 0}, {"s", 2, 4}}) == ErrorCode::bands_gap);
  CHECK(code({{"z", 1, 1}, {"s", 2, 4}}) == ErrorCode::bands_gap);
  CHECK(code({{"z", 0, 2}, {"s", 2, 4}}) == ErrorCode::bands_overlap);
  CHECK(code({{"z", 0, 4}, {"s", 1, 2}}) == ErrorCode::bands_overlap);
  CHECK(code({{"z", 0, 0}, {"s", 4, 1}}) == ErrorCode::bands_order);
  CHECK(code({{"z", 0, 0}, {"s", 1, 4}, {"m", 0, 0}}) == ErrorCode::bands_order);
  CHECK(code({{"z", 0, 0}, {"z", 1, 4}}) == ErrorCode::parse);
  CHECK(code({{"z", 0, 0}}) == ErrorCode::parse);
  CHECK_THROWS_AS(QualityScale({{"z", 0, 0}, {"s", 3, 4}}), Error);
}

TEST_CASE("observe yields a pure belief") {
  const auto scale = QualityScale::standard();
  const auto b11 = observe(11, scale);
  CHECK(b11.believe() == L);
  CHECK(b11.degree(L) == Degree(1, 1));
  CHECK(b11.degree(S).is_zero());
  CHECK(observe(0, scale) == ColumnBelief::pure(Z, 4));
  CHECK(observe(5, scale) == belief({0, 0, 4, 0}, M));
  CHECK(apply_removal(b11).degree(M) == Degree(1, 4));
}

TEST_CASE("degree arithmetic is exact") {
  CHECK(Degree(2, 4) == Degree(1, 2));
  CHECK(Degree(3, 6) == Degree(2, 4));
  CHECK(Degree(3, 4) > Degree(1, 2));
  CHECK_FALSE(Degree(2, 4).exceeds_half());
  CHECK(Degree(3, 4).exceeds_half());
  CHECK(to_string(Degree(3, 4)) == "3/4");
}

TEST_CASE("apply_removal follows the causal laws") {
  CHECK(apply_removal(belief({0, 0, 0, 4}, L)) == belief({0, 0, 1, 3}, L));
  CHECK(apply_removal(belief({0, 0, 2, 2}, L)) == belief({0, 0, 3, 1}, M));
  // saturation
  CHECK(apply_removal(belief({4, 0, 0, 0}, Z)) == belief({4, 0, 0, 0}, Z));
  // the tie does not switch
  CHECK(apply_removal(belief({0, 0, 1, 3}, L)) == belief({0, 0, 2, 2}, L));
  // entering a new pair from a pure state
  CHECK(apply_removal(belief({0, 0, 4, 0}, M)) == belief({0, 1, 3, 0}, M));
}

TEST_CASE("apply_addition mirrors removal") {
  CHECK(apply_addition(belief({4, 0, 0, 0}, Z)) == belief({3, 1, 0, 0}, Z));
  CHECK(apply_addition(apply_addition(belief({0, 0, 3, 1}, M))) == belief({0, 0, 1, 3}, L));
  CHECK(apply_addition(belief({0, 0, 0, 4}, L)) == belief({0, 0, 0, 4}, L));
  CHECK(apply_addition(belief({0, 0, 3, 1}, M)) == belief({0, 0, 2, 2}, M));
}

TEST_CASE("from_numerators rejects broken vectors") {
  CHECK_THROWS_AS(belief({1, 1, 1, 0}, Z), Error);     // sum 3
  CHECK_THROWS_AS(belief({2, 0, 2, 0}, Z), Error);     // non-adjacent
  CHECK_THROWS_AS(belief({3, 1, 0, 0}, S), Error);     // believe below 1/2
  CHECK_THROWS_AS(belief({-1, 5, 0, 0}, S), Error);
  CHECK_NOTHROW(belief({2, 2, 0, 0}, S));
}

TEST_CASE("Staircase trajectories from 9 to 12 blocks") {
  const auto scale = QualityScale::standard();
  for (std::size_t block = 0; block < oracle::kStaircase.size(); ++block) {
    const int start = oracle::kStaircaseStarts[block];
    const auto& table = oracle::kStaircase[block];
    CAPTURE(start);
    ColumnBelief cb = observe(start, scale);
    for (int count = start; count >= 0; --count) {
      const std::size_t col = static_cast<std::size_t>(12 - count);
      for (int row = 0; row < 4; ++row) {
        const int expected = table[static_cast<std::size_t>(row)][col];
        CAPTURE(count);
        CAPTURE(row);
        CHECK(cb.degree(Quality{3 - row}) == Degree(expected < 0 ? 0 : expected, 4));
      }
      cb = apply_removal(cb);
    }
  }
}

TEST_CASE("updates agree with the triangular membership oracle") {
  std::mt19937 rng(99);
  for (int g = 2; g <= 7; ++g) {
    std::uniform_int_distribution<int> q(0, g - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const int start = q(rng);
      ColumnBelief cb = ColumnBelief::pure(Quality{start}, g);
      oracle::TriangularColumn ref(start, g);
      for (int step = 0; step < 40; ++step) {
        if (rng() & 1) {
          cb = apply_removal(cb);
          ref.remove();
        } else {
          cb = apply_addition(cb);
          ref.add();
        }
        REQUIRE(ref.matches(cb));
        check_invariants(cb);
      }
    }
  }
}

TEST_CASE("removal and addition undo each other off saturation") {
  std::mt19937 rng(5);
  for (int g = 2; g <= 6; ++g) {
    for (int trial = 0; trial < 300; ++trial) {
      ColumnBelief cb = ColumnBelief::pure(Quality{static_cast<int>(rng() % g)}, g);
      for (int n = static_cast<int>(rng() % 30); n > 0; --n) cb = (rng() & 1) ? apply_removal(cb) : apply_addition(cb);

      const ColumnBelief down = apply_removal(cb);
      if (down != cb) {
        const ColumnBelief back = apply_addition(down);
        CHECK(back.numerators() == cb.numerators());
        if (down.believe() == cb.believe()) CHECK(back == cb);
      }
      const ColumnBelief up = apply_addition(cb);
      if (up != cb) {
        const ColumnBelief back = apply_removal(up);
        CHECK(back.numerators() == cb.numerators());
        if (up.believe() == cb.believe()) CHECK(back == cb);
      }
    }
  }
}

TEST_CASE("believe staircase") {
  for (int g = 2; g <= 8; ++g) {
    for (int dir : {-1, +1}) {
      const int start = dir < 0 ? g - 1 : 0;
      ColumnBelief cb = ColumnBelief::pure(Quality{start}, g);
      std::vector<int> switches;
      for (int step = 1; step <= g * g; ++step) {
        const Quality before = cb.believe();
        cb = dir < 0 ? apply_removal(cb) : apply_addition(cb);
        if (cb.believe() != before) switches.push_back(step);
      }
      CAPTURE(g);
      REQUIRE(switches.size() == static_cast<std::size_t>(g - 1));
      CHECK(switches.front() == g / 2 + 1);
      for (std::size_t i = 1; i < switches.size(); ++i) CHECK(switches[i] - switches[i - 1] == g);
    }
  }
}

TEST_CASE("poss and apply_move") {
  const auto scale = std::make_shared<const QualityScale>(QualityScale::standard());
  const std::vector<int> counts{11, 0, 6};
  const BeliefState state = BeliefState::observe(counts, scale);

  CHECK(poss(state, mv(1, 2)));
  CHECK_FALSE(poss(state, mv(2, 1)));
  CHECK_THROWS_AS((void)poss(state, mv(1, 4)), Error);

  const BeliefState after = apply_move(state, mv(1, 2));
  CHECK(after.column(ColumnId(1)) == belief({0, 0, 1, 3}, L));
  CHECK(after.column(ColumnId(2)) == belief({3, 1, 0, 0}, Z));
  CHECK(after.column(ColumnId(3)) == state.column(ColumnId(3)));

  try {
    (void)apply_move(state, mv(2, 3));
    FAIL("expected E_NOT_POSSIBLE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_possible);
  }

  const BeliefState small_half(scale, {belief({2, 2, 0, 0}, S), ColumnBelief::pure(Z, 4)});
  CHECK(poss(small_half, mv(1, 2)));
}

TEST_CASE("frame: untouched columns stay bit-identical") {
  std::mt19937 rng(17);
  const auto scale = std::make_shared<const QualityScale>(QualityScale::standard());
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    std::vector<int> counts;
    for (int i = 0; i < n; ++i) counts.push_back(static_cast<int>(rng() % 13));
    BeliefState state = BeliefState::observe(counts, scale);
    for (int step = 0; step < 20; ++step) {
      const int src = 1 + static_cast<int>(rng() % n);
      int dst = 1 + static_cast<int>(rng() % n);
      if (dst == src) dst = src % n + 1;
      const Action a = mv(src, dst);
      if (!poss(state, a)) continue;
      const BeliefState next = apply_move(state, a);
      for (int c = 1; c <= n; ++c) {
        if (c != src && c != dst) CHECK(next.column(ColumnId(c)) == state.column(ColumnId(c)));
      }
      state = next;
    }
  }
}
