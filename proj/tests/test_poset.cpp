#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pal/corpus.hpp"
#include "pal/error.hpp"
#include "pal/poset.hpp"

using namespace pal;

namespace {

void check_axioms(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a) {
    CHECK(p.leq(a, a));
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a != b) CHECK_FALSE((p.leq(a, b) && p.leq(b, a)));
      for (std::size_t c = 0; c < p.size(); ++c)
        if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
    }
  }
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("build closes the relation and names V3") {
  auto v3 = Poset::build("V3", {"a", "b", "c"}, Poset::Relation{{"a", "c"}, {"b", "c"}});
  CHECK(v3->name() == "V3");
  CHECK(v3->leq(v3->index_of("a"), v3->index_of("c")));
  CHECK(v3->incomparable(v3->index_of("a"), v3->index_of("b")));
  CHECK(*v3 == *posets::v3());

  auto chain = Poset::build("c", {"0", "1", "2"}, Poset::Relation{{"0", "1"}, {"1", "2"}});
  CHECK(chain->leq(0, 2));
  CHECK_FALSE(chain->incomparable(0, 2));
  CHECK(chain->is_chain());
}

TEST_CASE("build rejects cycles, duplicates and unknown names") {
  try {
    Poset::build("bad", {"0", "1"}, Poset::Relation{{"0", "1"}, {"1", "0"}});
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cycle);
    CHECK(e.witness().size() == 2);
  }
  CHECK(kind_of([] { Poset::build("d", {"a", "a"}, Poset::Relation{}); }) == ErrorKind::DuplicateName);
  CHECK(kind_of([] { Poset::build("u", {"a"}, Poset::Relation{{"a", "z"}}); }) == ErrorKind::UnknownElement);
  CHECK(kind_of([] { posets::v3()->index_of("z"); }) == ErrorKind::UnknownElement);
}

TEST_CASE("upset, downset and minimals on V3") {
  auto p = posets::v3();
  const auto a = p->index_of("a"), c = p->index_of("c");
  CHECK(p->upset(ElemSet::single(a)) == p->set_of({"a", "c"}));
  CHECK(p->minimals(p->set_of({"a", "c"})) == ElemSet::single(a));
  CHECK(p->upset(ElemSet{}).empty());
  CHECK(p->downset(ElemSet::single(c)) == p->all());
  CHECK(p->maximals(p->all()) == ElemSet::single(c));
}

TEST_CASE("rado prefix order rule") {
  auto r = posets::rado_prefix(3);
  CHECK(r->size() == 6);
  CHECK(r->leq(r->index_of("(0,1)"), r->index_of("(2,3)")));
  CHECK(r->incomparable(r->index_of("(0,3)"), r->index_of("(1,3)")));
  // Whole relation against the defining rule.
  for (std::size_t x = 0; x < r->size(); ++x)
    for (std::size_t y = 0; y < r->size(); ++y) {
      int i, j, k, l;
      std::sscanf(r->element_name(x).c_str(), "(%d,%d)", &i, &j);
      std::sscanf(r->element_name(y).c_str(), "(%d,%d)", &k, &l);
      CHECK(r->leq(x, y) == ((i == k && j <= l) || j < k));
    }
  check_axioms(*r);
}

TEST_CASE("lex sum puts each lower block below each upper block") {
  auto lex = posets::lex_sum(*posets::chain(2), {posets::antichain(2), posets::antichain(2)});
  CHECK(lex->size() == 4);
  for (std::size_t lo = 0; lo < 2; ++lo)
    for (std::size_t hi = 2; hi < 4; ++hi) CHECK(lex->lt(lo, hi));
  CHECK(lex->incomparable(0, 1));
  CHECK(lex->incomparable(2, 3));

  // Empty parts are allowed.
  auto with_empty = posets::lex_sum(*posets::chain(3), {posets::chain(1), posets::antichain(0), posets::chain(1)});
  CHECK(with_empty->size() == 2);
  CHECK(with_empty->lt(0, 1));
}

TEST_CASE("product, disjoint sum and dual") {
  auto prod = posets::product(*posets::chain(2), *posets::chain(2));
  CHECK(prod->size() == 4);
  CHECK(prod->incomparable(prod->index_of("(0,1)"), prod->index_of("(1,0)")));
  CHECK(prod->leq(prod->index_of("(0,0)"), prod->index_of("(1,1)")));
  auto sum = posets::disjoint_sum({posets::chain(2), posets::chain(1)});
  CHECK(sum->size() == 3);
  CHECK(sum->strict_pairs() == 1);
  auto d = posets::dual(*posets::v3());
  CHECK(d->lt(d->index_of("c"), d->index_of("a")));
  CHECK_THROWS_AS(posets::product(*posets::chain(20), *posets::chain(20)), Error);
}

TEST_CASE("segment enumeration counts") {
  CHECK(initial_segments(*posets::chain(2)).size() == 3);
  auto v3 = posets::v3();
  auto is = initial_segments(*v3);
  REQUIRE(is.size() == 5);
  // Same family as the subset scan.
  const auto down = oracle::downsets(*v3);
  std::set<oracle::Mask> expected(down.begin(), down.end());
  std::set<oracle::Mask> got;
  for (const auto& s : is) got.insert(oracle::mask_of(s));
  CHECK(got == expected);
  CHECK(got.count(oracle::names_mask(*v3, {"a", "b"})));
  CHECK(initial_segments(*posets::antichain(3)).size() == 8);
  CHECK(final_segments(*posets::chain(3)).size() == 4);
  CHECK_THROWS_AS(final_segments(*posets::antichain(10), 100), Error);
}

TEST_CASE("property: every corpus poset satisfies the axioms and the segment identities") {
  for (const auto& p : corpus::up_to(5)) {
    CAPTURE(p->name());
    check_axioms(*p);
    CHECK(*posets::dual(*posets::dual(*p)) == *p);
    CHECK(initial_segments(*p).size() == final_segments(*posets::dual(*p)).size());
    CHECK(final_segments(*p).size() == oracle::upsets(*p).size());

    auto branching = final_segments_branching(*p);
    std::sort(branching.begin(), branching.end());
    CHECK(branching == final_segments(*p));

    for (oracle::Mask m = 0; m < (oracle::Mask{1} << p->size()); ++m) {
      ElemSet s = oracle::set_of(m);
      ElemSet mins = p->minimals(s);
      CHECK(p->is_antichain(mins));
      CHECK(mins.subset_of(s));
      CHECK(p->upset(mins) == p->upset(s));
      CHECK(p->is_up_closed(s) == oracle::up_closed(*p, m));
    }
  }
}

TEST_CASE("property: random posets satisfy the axioms") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto p = posets::random_poset(9, 0.3, seed);
    check_axioms(*p);
    CHECK(*p == *posets::random_poset(9, 0.3, seed));
  }
}

TEST_CASE("linear augmentation extends the order") {
  auto v3 = posets::v3();
  auto aug = linear_augmentation(*v3, 7);
  CHECK(aug.chain->is_chain());
  CHECK(aug.position[v3->index_of("c")] == 2);

  auto a2 = posets::antichain(2);
  CHECK(linear_augmentation(*a2, 3).order == linear_augmentation(*a2, 3).order);

  auto c4 = posets::chain(4);
  auto id = linear_augmentation(*c4, 11);
  for (std::size_t i = 0; i < 4; ++i) CHECK(id.order[i] == i);

  for (const auto& p : corpus::up_to(5))
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto l = linear_augmentation(*p, seed);
      CHECK(l.chain->is_chain());
      for (std::size_t a = 0; a < p->size(); ++a) {
        CHECK(l.order[l.position[a]] == a);
        for (std::size_t b = 0; b < p->size(); ++b)
          if (p->leq(a, b)) CHECK(l.chain->leq(l.position[a], l.position[b]));
      }
    }
}

TEST_CASE("hasse edges are the covering pairs") {
  auto p = posets::chain(4);
  CHECK(p->hasse_edges().size() == 3);
  CHECK(posets::v3()->hasse_edges().size() == 2);
  for (const auto& q : corpus::up_to(4))
    for (auto [a, b] : q->hasse_edges()) {
      CHECK(q->lt(a, b));
      for (std::size_t c = 0; c < q->size(); ++c) CHECK_FALSE((q->lt(a, c) && q->lt(c, b)));
    }
}
