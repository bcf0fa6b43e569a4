#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pal/error.hpp"
#include "pal/wqo.hpp"

using namespace pal;

TEST_CASE("bad pairs of finite sequences") {
  auto c3 = posets::chain(3);
  CHECK(bad_pairs(*c3, {0, 1, 2}).empty());
  auto bp = bad_pairs(*c3, {2, 0});
  REQUIRE(bp.size() == 1);
  CHECK(bp[0] == std::pair<std::size_t, std::size_t>{0, 1});
  auto r4 = posets::rado_prefix(4);
  auto seq = std::vector<std::size_t>{r4->index_of("(0,4)"), r4->index_of("(1,4)"), r4->index_of("(2,4)")};
  CHECK(bad_pairs(*r4, seq).size() == 3);
  CHECK_THROWS_AS(bad_pairs(*c3, {5}), Error);
}

TEST_CASE("fronts and the precedes relation") {
  Front f(2, 4);
  CHECK(f.blocks().size() == 6);
  CHECK(f.precedes({0, 1}, {1, 2}));
  CHECK_FALSE(f.precedes({0, 1}, {2, 3}));
  Front f1(1, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(f1.precedes({i}, {j}) == (i < j));
  auto sq = front_square(Front(2, 3));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == Block{0, 1, 2});
  CHECK_THROWS_AS(Front(0, 3), Error);
  CHECK_THROWS_AS(Front(4, 3), Error);
}

TEST_CASE("property: precedes is irreflexive and successors exist below the horizon") {
  for (std::size_t k = 2; k <= 4; ++k)
    for (std::size_t n = k; n <= 8; ++n) {
      Front f(k, n);
      for (const auto& s : f.blocks()) {
        CHECK_FALSE(f.precedes(s, s));
        if (s.back() < n - 1) CHECK_FALSE(f.successors(s).empty());
        for (const auto& t : f.successors(s)) CHECK(std::equal(s.begin() + 1, s.end(), t.begin()));
      }
      for (const auto& u : front_square(f)) CHECK(u.size() == k + 1);
    }
}

TEST_CASE("array classification") {
  auto r12 = posets::rado_prefix(12);
  auto cls = classify_array(*r12, rado_identity_labeling(*r12, 12));
  CHECK(cls.verdict == ArrayVerdict::Bad);
  CHECK(cls.good_pairs == 0);
  CHECK(cls.bad_pairs > 0);
  CHECK(std::string(to_string(cls.verdict)) == "bad");

  ArrayLabeling constant{Front(2, 6), {}};
  constant.label.assign(constant.front.blocks().size(), 0);
  CHECK(classify_array(*posets::v3(), constant).verdict == ArrayVerdict::Perfect);

  const std::size_t n = 7;
  auto chain = posets::chain(n);
  ArrayLabeling mins{Front(2, n), {}};
  for (const auto& b : mins.front.blocks()) mins.label.push_back(b[0]);
  auto m = classify_array(*chain, mins);
  CHECK(m.verdict == ArrayVerdict::Perfect);
  CHECK(m.bad_pairs == 0);

  ArrayLabeling mixed{Front(2, 5), {}};
  for (const auto& b : mixed.front.blocks()) mixed.label.push_back(b[0] % 2);
  auto mx = classify_array(*posets::antichain(2), mixed);
  CHECK(mx.verdict == ArrayVerdict::Mixed);
  CHECK(mx.good_witness.has_value());
  CHECK(mx.bad_witness.has_value());
}

TEST_CASE("property: the Rado labeling is bad at every horizon") {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto r = posets::rado_prefix(n);
    auto cls = classify_array(*r, rado_identity_labeling(*r, n));
    CHECK(cls.verdict == ArrayVerdict::Bad);
    CHECK(cls.good_pairs == 0);
  }
}

TEST_CASE("property: arity-one arrays agree with bad_pairs") {
  std::mt19937_64 rng(41);
  auto p = posets::random_poset(6, 0.4, 2);
  std::uniform_int_distribution<std::size_t> elem(0, p->size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 6;
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i < n; ++i) seq.push_back(elem(rng));
    ArrayLabeling arr{Front(1, n), seq};
    auto cls = classify_array(*p, arr);
    auto bad = bad_pairs(*p, seq);
    const std::size_t pairs = n * (n - 1) / 2;
    CHECK((cls.verdict == ArrayVerdict::Bad) == (bad.size() == pairs));
    CHECK((cls.verdict == ArrayVerdict::Perfect) == bad.empty());
    CHECK(cls.bad_pairs == bad.size());
  }
}

TEST_CASE("narrowness and descent probes") {
  CHECK(narrowness_probe(*posets::antichain(4)) == 4);
  CHECK(wellfoundedness_probe(*posets::antichain(4)) == 1);
  CHECK(narrowness_probe(*posets::chain(4)) == 1);
  CHECK(wellfoundedness_probe(*posets::chain(4)) == 4);
  auto r5 = posets::rado_prefix(5);
  CHECK(narrowness_probe(*r5) == 5);
  CHECK(narrowness_probe(*r5) == oracle::width(*r5));
  CHECK(wellfoundedness_probe(*r5) == oracle::height(*r5));
  // {(i,5) : i < 5} is one maximum antichain.
  ElemSet top;
  for (int i = 0; i < 5; ++i) top.set(r5->index_of("(" + std::to_string(i) + ",5)"));
  CHECK(r5->is_antichain(top));
}

TEST_CASE("property: probes match subset scans up to 12 elements") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto p = posets::random_poset(5 + seed % 8, 0.1 + 0.03 * (seed % 10), 100 + seed);
    CHECK(narrowness_probe(*p) == oracle::width(*p));
    CHECK(wellfoundedness_probe(*p) == oracle::height(*p));
  }
}
