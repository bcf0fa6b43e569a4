#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pal/corpus.hpp"
#include "pal/error.hpp"
#include "pal/io.hpp"
#include "pal/stone.hpp"

using namespace pal;

namespace {

// Relabels p by a random permutation.
PosetPtr shuffled(const Poset& p, std::uint64_t seed) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) names[perm[i]] = p.element_name(i);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) rel.emplace_back(perm[a], perm[b]);
  return Poset::build("s", names, rel);
}

}  // namespace

TEST_CASE("corpus sizes match the known counts of unlabeled posets") {
  // 1, 1, 2, 5, 16, 63, 318 posets on 0..6 points.
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(corpus::nonisomorphic(n).size() == expected[n]);
  CHECK(corpus::up_to(5).size() == 1 + 2 + 5 + 16 + 63);
}

TEST_CASE("corpus members are pairwise non-isomorphic and codes are relabeling-invariant") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> codes;
    for (const auto& p : corpus::nonisomorphic(n)) {
      CHECK(p->size() == n);
      codes.insert(corpus::canonical_code(*p));
      for (std::uint64_t seed = 0; seed < 3; ++seed)
        CHECK(corpus::canonical_code(*shuffled(*p, seed)) == corpus::canonical_code(*p));
    }
    CHECK(codes.size() == corpus::nonisomorphic(n).size());
  }
  // Every random 5-point poset is isomorphic to some corpus member.
  std::set<std::uint64_t> codes;
  for (const auto& p : corpus::nonisomorphic(5)) codes.insert(corpus::canonical_code(*p));
  for (const auto& p : corpus::random(100, 5, 9)) CHECK(codes.count(corpus::canonical_code(*p)) == 1);
}

TEST_CASE("random corpus is seeded") {
  auto a = corpus::random(5, 7, 1);
  auto b = corpus::random(5, 7, 1);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(*a[i] == *b[i]);
}

TEST_CASE("poset JSON round trip") {
  auto v3 = posets::v3();
  auto j = io::poset_to_json(*v3);
  CHECK(j["elements"].size() == 3);
  CHECK(j["le"].size() == 2);
  auto back = io::poset_from_json(j);
  CHECK(*back == *v3);
  for (const auto& p : corpus::up_to(4)) CHECK(*io::poset_from_json(io::poset_to_json(*p)) == *p);
}

TEST_CASE("poset JSON errors") {
  CHECK_THROWS_AS(io::poset_from_json(io::Json::parse(R"({"le": []})")), Error);
  try {
    io::poset_from_json(io::Json::parse(R"({"elements": ["a", 3]})"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
  try {
    io::poset_from_json(io::Json::parse(R"({"elements": ["a","b"], "le": [["a","b"],["b","a"]]})"));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cycle);
  }
}

TEST_CASE("DOT export lists the covering edges") {
  auto dot = io::hasse_dot(*posets::chain(3));
  CHECK(dot.find("\"0\" -> \"1\"") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"2\"") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"2\"") == std::string::npos);
  auto v3 = io::hasse_dot(*posets::v3());
  CHECK(std::count(v3.begin(), v3.end(), '>') == 2);
}

TEST_CASE("clopen JSON lists sorted segments") {
  auto v3 = posets::v3();
  StoneSpace space(v3);
  auto j = io::clopen_to_json(space, v_set(space, v3->index_of("a")));
  CHECK(j == io::Json::parse(R"([["a","b","c"],["a","c"]])"));
}

TEST_CASE("array labeling JSON") {
  auto rado = posets::rado_prefix(4);
  auto gen = io::labeling_from_json(*rado, io::Json::parse(R"({"k":2,"N":4,"generator":"rado-identity"})"));
  CHECK(gen.label.size() == 6);
  io::Json explicit_labels{{"k", 2}, {"N", 4}, {"labels", io::Json::object()}};
  for (const auto& b : gen.front.blocks())
    explicit_labels["labels"][std::to_string(b[0]) + "," + std::to_string(b[1])] =
        "(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + ")";
  auto parsed = io::labeling_from_json(*rado, explicit_labels);
  CHECK(parsed.label == gen.label);

  explicit_labels["labels"].erase("0,1");
  CHECK_THROWS_AS(io::labeling_from_json(*rado, explicit_labels), Error);
  CHECK_THROWS_AS(io::labeling_from_json(*rado, io::Json::parse(R"({"k":0,"N":4,"labels":{}})")), Error);
}
