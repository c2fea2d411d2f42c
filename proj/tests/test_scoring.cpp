#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "clst/scoring.hpp"

using namespace clst;

namespace {

// Straight-line oracle re-implementations of the two scoring formulas,
// kept independent of the library code path on purpose.
double oracle_clst05(const std::vector<WordPosition>& ps, double a, double b) {
  double s = 0.0;
  for (const WordPosition& p : ps)
    s += std::exp(a * (double(p.nd) / (double(p.nd) + double(p.nh) - 1.0)) +
                  b * double(p.cd));
  return s;
}

double oracle_clst06(const std::vector<WordPosition>& ps, double a, double b) {
  int mnd = 0, mcd = 0;
  for (const WordPosition& p : ps) {
    mnd = std::max(mnd, p.nd);
    mcd = std::max(mcd, p.cd);
  }
  return double(ps.size()) * std::exp(a * mnd + b * mcd);
}

std::vector<WordPosition> random_positions(std::mt19937& rng, int max_size) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  std::uniform_int_distribution<int> nd_dist(1, 6);
  std::uniform_int_distribution<int> extra(0, 4);
  std::uniform_int_distribution<int> cd_dist(1, 8);
  std::vector<WordPosition> ps(size_dist(rng));
  for (WordPosition& p : ps) {
    p.nd = nd_dist(rng);
    p.nh = 1 + extra(rng);
    p.cd = cd_dist(rng);
  }
  return ps;
}

}  // namespace

TEST_CASE("clst05 worked examples") {
  std::vector<WordPosition> deep = {{3, 1, 2}};
  CHECK(clst05(deep, 1.0, 1.0) == doctest::Approx(std::exp(3.0)).epsilon(1e-12));
  CHECK(clst05(deep, 1.0, 1.0) == doctest::Approx(20.085536923187668));

  std::vector<WordPosition> shallow = {{1, 3, 1}};
  CHECK(clst05(shallow, 1.0, 0.0) ==
        doctest::Approx(std::exp(1.0 / 3.0)).epsilon(1e-12));
  CHECK(clst05(shallow, 1.0, 0.0) == doctest::Approx(1.3956124250860895));

  std::vector<WordPosition> several = {{1, 3, 1}, {3, 1, 2}, {2, 2, 4}};
  CHECK(clst05(several, 0.0, 0.0) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("clst06 worked examples") {
  std::vector<WordPosition> pair = {{1, 3, 1}, {3, 1, 2}};
  CHECK(clst06(pair, 1.0, 1.0) ==
        doctest::Approx(2.0 * std::exp(5.0)).epsilon(1e-12));
  CHECK(clst06(pair, 1.0, 1.0) == doctest::Approx(296.8263182051532));
  CHECK(clst06(pair, 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-12));

  std::vector<WordPosition> single = {{2, 2, 1}};
  CHECK(clst06(single, 1.0, 1.0) ==
        doctest::Approx(std::exp(3.0)).epsilon(1e-12));
}

TEST_CASE("empty position multisets are rejected") {
  std::vector<WordPosition> empty;
  CHECK_THROWS_AS(clst05(empty, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(clst06(empty, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("both scorers match the oracle on random multisets") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> param(0.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto ps = random_positions(rng, 12);
    double a = param(rng), b = param(rng);
    CHECK(clst05(ps, a, b) ==
          doctest::Approx(oracle_clst05(ps, a, b)).epsilon(1e-12));
    CHECK(clst06(ps, a, b) ==
          doctest::Approx(oracle_clst06(ps, a, b)).epsilon(1e-12));
    // both equal |P(s)| at alpha = beta = 0
    CHECK(clst05(ps, 0.0, 0.0) ==
          doctest::Approx(double(ps.size())).epsilon(1e-12));
    CHECK(clst06(ps, 0.0, 0.0) ==
          doctest::Approx(double(ps.size())).epsilon(1e-12));
  }
}

TEST_CASE("clst05 monotonicity in nd and cd") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto ps = random_positions(rng, 8);
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    std::size_t i = pick(rng);
    // nd/(nd+nh-1) is constant in nd at nh = 1; strictness needs nh >= 2
    ps[i].nh = std::max(ps[i].nh, 2);
    auto deeper = ps;
    deeper[i].nd += 1;
    CHECK(clst05(deeper, 1.5, 0.5) > clst05(ps, 1.5, 0.5));
    auto deeper_claim = ps;
    deeper_claim[i].cd += 1;
    CHECK(clst05(deeper_claim, 1.5, 0.5) > clst05(ps, 1.5, 0.5));
  }
}

TEST_CASE("clst06 monotonicity in max nd") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto ps = random_positions(rng, 8);
    int max_nd = 0;
    for (const auto& p : ps) max_nd = std::max(max_nd, p.nd);
    auto bumped = ps;
    bumped[0].nd = max_nd + 1;
    CHECK(clst06(bumped, 1.0, 0.5) > clst06(ps, 1.0, 0.5));
  }
}

TEST_CASE("aggregate_stems pools words sharing a stem") {
  PositionIndex index;
  index["iteration"] = {{2, 2, 2}, {3, 1, 2}};
  index["iterations"] = {{1, 2, 1}};
  index["pump"] = {{1, 1, 1}};
  auto profiles = aggregate_stems(index);
  REQUIRE(profiles.size() == 2);

  const StemProfile* iter = nullptr;
  const StemProfile* pump = nullptr;
  for (const auto& p : profiles) {
    if (p.stem == "iter") iter = &p;
    if (p.stem == "pump") pump = &p;
  }
  REQUIRE(iter != nullptr);
  REQUIRE(pump != nullptr);
  CHECK(iter->positions.size() == 3);
  CHECK(iter->representative == "iteration");
  CHECK(pump->representative == "pump");
}

TEST_CASE("representative ties break lexicographically") {
  PositionIndex index;
  index["pump"] = {{1, 1, 1}};
  index["pumps"] = {{2, 1, 1}};
  auto profiles = aggregate_stems(index);
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0].representative == "pump");
}

TEST_CASE("aggregation conserves position counts") {
  std::mt19937 rng(31);
  const char* words[] = {"iteration", "iterations", "iterate", "pump",
                         "pumps",     "valve",      "zeolite"};
  PositionIndex index;
  std::size_t total = 0;
  for (const char* w : words) {
    auto ps = random_positions(rng, 5);
    total += ps.size();
    index[w] = ps;
  }
  auto profiles = aggregate_stems(index);
  std::size_t pooled = 0;
  for (const auto& p : profiles) pooled += p.positions.size();
  CHECK(pooled == total);
}

TEST_CASE("select_top_n orders and truncates") {
  std::vector<ScoredStem> scored;
  auto add = [&](const char* stem, double score) {
    ScoredStem s;
    s.profile.stem = stem;
    s.profile.representative = stem;
    s.score = score;
    scored.push_back(std::move(s));
  };
  add("pump", 5.0);
  add("valv", 5.0);
  add("seal", 9.0);
  add("gear", 1.0);
  add("bolt", 3.0);

  auto top = select_top_n(scored, 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0].profile.stem == "seal");
  CHECK(top[1].profile.stem == "pump");  // tie with valv, lexicographic
  CHECK(top[2].profile.stem == "valv");

  CHECK(select_top_n(scored, 10).size() == 5);
}

TEST_CASE("top-n order is invariant under positive scaling") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> score(0.1, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ScoredStem> scored;
    for (int i = 0; i < 12; ++i) {
      ScoredStem s;
      s.profile.stem = "s" + std::to_string(i);
      s.score = score(rng);
      scored.push_back(s);
    }
    double c = score(rng);
    std::vector<ScoredStem> scaled = scored;
    for (auto& s : scaled) s.score *= c;
    auto a = select_top_n(scored, 5);
    auto b = select_top_n(scaled, 5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(a[i].profile.stem == b[i].profile.stem);
  }
}

TEST_CASE("build_query boosts normalize to a maximum of ten") {
  std::vector<ScoredStem> top;
  auto add = [&](const char* word, double score) {
    ScoredStem s;
    s.profile.stem = word;
    s.profile.representative = word;
    s.score = score;
    top.push_back(std::move(s));
  };
  add("zeolite", 20.0);
  add("matrix", 10.0);

  QuerySpec plain = build_query(top, false);
  REQUIRE(plain.terms.size() == 2);
  CHECK(plain.terms[0].boost == doctest::Approx(1.0));
  CHECK(plain.terms[1].boost == doctest::Approx(1.0));

  QuerySpec boosted = build_query(top, true);
  CHECK(boosted.terms[0].word == "zeolite");
  CHECK(boosted.terms[0].boost == doctest::Approx(10.0));
  CHECK(boosted.terms[1].boost == doctest::Approx(5.0));

  CHECK(build_query({}, true).terms.empty());
}

TEST_CASE("scores survive exponent clamping on pathological trees") {
  std::vector<WordPosition> extreme = {{500, 1, 2000}};
  double v = clst06(extreme, 5.0, 5.0);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
}
