#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pal/corpus.hpp"
#include "pal/error.hpp"
#include "pal/morphisms.hpp"

using namespace pal;

namespace {

std::vector<AlgebraElem> all_elements(const PosetPtr& p) {
  StoneSpace s(p);
  std::vector<AlgebraElem> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m) out.push_back(element_of_mask(s, m));
  return out;
}

std::size_t distinct(const std::vector<AlgebraElem>& es) {
  std::set<Bits> keys;
  for (const auto& e : es) keys.insert(canonical_table(e));
  return keys.size();
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

std::vector<AlgebraElem> gens(const PosetPtr& p) {
  std::vector<AlgebraElem> out;
  for (std::size_t i = 0; i < p->size(); ++i) out.push_back(AlgebraElem::gen(p, i));
  return out;
}

}  // namespace

TEST_CASE("extension of order-preserving maps") {
  auto v3 = posets::v3();
  Hom id = extend_hom(v3, v3, gens(v3));
  auto elems = all_elements(v3);
  CHECK(elems.size() == 32);
  for (const auto& e : elems) CHECK(equals(id.apply(e), e));

  auto c2 = posets::chain(2);
  Hom ones = extend_hom(c2, c2, {AlgebraElem::one(c2), AlgebraElem::one(c2)});
  CHECK(is_zero(ones.apply(complement(AlgebraElem::gen(c2, 0)))));

  try {
    extend_hom(v3, v3, {AlgebraElem::one(v3), AlgebraElem::one(v3), AlgebraElem::zero(v3)});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOrderPreserving);
    REQUIRE(e.witness().size() == 2);
    CHECK(e.witness()[1] == "c");
  }
}

TEST_CASE("homomorphism laws and uniqueness") {
  auto v3 = posets::v3();
  auto c2 = posets::chain(2);
  Hom h = extend_hom(v3, c2, {AlgebraElem::gen(c2, 0), AlgebraElem::gen(c2, 1), AlgebraElem::gen(c2, 1)});
  auto rep = check_hom_laws(h);
  CHECK(rep.ok);
  CHECK(rep.exhaustive);
  CHECK(rep.elements_checked == 32);
  for (const auto& e : all_elements(v3)) CHECK(equals(h.apply(e), h.apply_by_atoms(e)));
}

TEST_CASE("property: random extensions satisfy the laws") {
  const auto sources = corpus::up_to(3);
  const auto targets = corpus::up_to(3);
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& p = sources[rng() % sources.size()];
    const auto& t = targets[rng() % targets.size()];
    StoneSpace ts(t);
    std::vector<AlgebraElem> raw;
    for (std::size_t e = 0; e < p->size(); ++e) raw.push_back(element_of_mask(ts, rng() % (1u << ts.size())));
    std::vector<AlgebraElem> f;
    for (std::size_t e = 0; e < p->size(); ++e) {
      AlgebraElem acc = AlgebraElem::zero(t);
      p->below(e).for_each([&](std::size_t b) { acc = join(acc, raw[b]); });
      f.push_back(acc);
    }
    Hom h = extend_hom(p, t, f);
    CHECK(check_hom_laws(h).ok);
    // Laws checked directly on every pair.
    auto elems = all_elements(p);
    for (const auto& x : elems) {
      CHECK(equals(h.apply(complement(x)), complement(h.apply(x))));
      for (const auto& y : elems) {
        CHECK(equals(h.apply(meet(x, y)), meet(h.apply(x), h.apply(y))));
        CHECK(equals(h.apply(join(x, y)), join(h.apply(x), h.apply(y))));
      }
    }
  }
}

TEST_CASE("subposet embeddings") {
  auto v3 = posets::v3();
  auto ab = induced_subposet(*v3, v3->set_of({"a", "b"}), "ab");
  Hom h = subposet_embedding(ab, v3, {v3->index_of("a"), v3->index_of("b")});
  auto elems = all_elements(ab);
  CHECK(elems.size() == 16);
  std::vector<AlgebraElem> images;
  for (const auto& e : elems) images.push_back(h.apply(e));
  CHECK(distinct(images) == 16);
  CHECK(check_embedding(h).injective);
  CHECK(check_embedding(h).lattice_into_lattice);

  Hom id = subposet_embedding(v3, v3, {0, 1, 2});
  for (const auto& e : all_elements(v3)) CHECK(equals(id.apply(e), e));

  auto ac = induced_subposet(*v3, v3->set_of({"a", "c"}), "ac");
  Hom hac = subposet_embedding(ac, v3, {v3->index_of("a"), v3->index_of("c")});
  std::vector<AlgebraElem> ac_images;
  for (const auto& e : all_elements(ac)) ac_images.push_back(hac.apply(e));
  CHECK(distinct(ac_images) == all_elements(ac).size());
  CHECK(equals(hac.apply(meet(AlgebraElem::gen(ac, 0), AlgebraElem::gen(ac, 1))), AlgebraElem::gen(v3, v3->index_of("a"))));

  CHECK(kind_of([&] { subposet_embedding(posets::antichain(2), v3, {0, 2}); }) == ErrorKind::NotAnEmbedding);
  CHECK(kind_of([&] { subposet_embedding(posets::chain(2), v3, {0, 0}); }) == ErrorKind::NotAnEmbedding);
}

TEST_CASE("property: every induced subposet embeds") {
  for (const auto& p : corpus::up_to(4))
    for (oracle::Mask m = 1; m < (oracle::Mask{1} << p->size()); ++m) {
      auto ids = oracle::set_of(m);
      auto q = induced_subposet(*p, ids, "q");
      auto rep = check_embedding(subposet_embedding(q, p, ids.ids()));
      CHECK(rep.injective);
      CHECK(rep.lattice_into_lattice);
    }
}

TEST_CASE("relativization") {
  auto v3 = posets::v3();
  auto rep = relativize(v3, v3->index_of("c"));
  CHECK(rep.q->names() == std::vector<std::string>{"a", "b"});
  CHECK(rep.source_atoms == 4);
  CHECK(rep.target_atoms == 4);
  CHECK(rep.bijective);
  CHECK(rep.homomorphism);
  CHECK(rep.unit_ok);

  // Independent count: 16 distinct images, all below x_c.
  Hom emb = subposet_embedding(rep.q, v3, rep.inclusion);
  auto xc = AlgebraElem::gen(v3, v3->index_of("c"));
  std::vector<AlgebraElem> images;
  for (const auto& y : all_elements(rep.q)) {
    images.push_back(meet(emb.apply(y), xc));
    CHECK(leq(images.back(), xc));
  }
  CHECK(distinct(images) == 16);

  auto a2 = posets::antichain(2);
  auto r2 = relativize(a2, 0);
  CHECK(r2.q->size() == 1);
  CHECK((std::size_t{1} << r2.target_atoms) == 4);
  CHECK(r2.bijective);

  auto c2 = posets::chain(2);
  auto rc = relativize(c2, 1);
  REQUIRE(rc.q->size() == 1);
  CHECK(rc.bijective);
  Hom e2 = subposet_embedding(rc.q, c2, rc.inclusion);
  auto x0 = AlgebraElem::gen(c2, 0), x1 = AlgebraElem::gen(c2, 1);
  CHECK(equals(meet(e2.apply(AlgebraElem::gen(rc.q, 0)), x1), meet(x0, x1)));
}

TEST_CASE("chain epimorphism") {
  auto v3 = posets::v3();
  auto aug = linear_augmentation(*v3, 1);
  auto rep = chain_epimorphism(v3, aug);
  CHECK(rep.surjective);
  CHECK(rep.lattice_image_ok);
  CHECK(rep.chain_lattice_ok);
  REQUIRE(rep.hom.has_value());
  std::vector<AlgebraElem> images;
  for (const auto& e : all_elements(v3)) images.push_back(rep.hom->apply(e));
  CHECK(distinct(images) == 16);

  auto c4 = posets::chain(4);
  auto rc = chain_epimorphism(c4, linear_augmentation(*c4, 2));
  CHECK(rc.surjective);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(equals(rc.hom->apply(AlgebraElem::gen(c4, i)), AlgebraElem::gen(rc.hom->target(), i)));

  // The join of two generators goes to the generator of whichever element
  // the augmentation places later.
  auto a2 = posets::antichain(2);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto l = linear_augmentation(*a2, seed);
    auto r = chain_epimorphism(a2, l);
    auto image = r.hom->apply(join(AlgebraElem::gen(a2, 0), AlgebraElem::gen(a2, 1)));
    CHECK(equals(image, AlgebraElem::gen(l.chain, 1)));
    CHECK(r.surjective);
  }
  CHECK(chain_epimorphism(v3, aug, Strictness::Strict).chain_lattice_ok);
}

TEST_CASE("E map") {
  auto c1 = posets::chain(1);
  EMap e(c1, c1);
  CHECK(equals(e(AlgebraElem::gen(c1, 0), AlgebraElem::gen(c1, 0)), AlgebraElem::gen(e.product(), 0)));

  auto a2 = posets::antichain(2);
  EMap f(a2, c1);
  auto lhs = f(join(AlgebraElem::gen(a2, 0), AlgebraElem::gen(a2, 1)), AlgebraElem::gen(c1, 0));
  auto pq = f.product();
  auto rhs = join(AlgebraElem::gen(pq, pq->index_of("(0,0)")), AlgebraElem::gen(pq, pq->index_of("(1,0)")));
  CHECK(equals(lhs, rhs));

  for (const auto& p : corpus::up_to(3))
    for (const auto& q : corpus::up_to(3)) {
      CAPTURE(p->name());
      CAPTURE(q->name());
      auto rep = verify_e_map(p, q);
      CHECK(rep.ok());
      CHECK(rep.failure == "");
    }
  CHECK(verify_e_map(posets::v3(), posets::chain(2), Strictness::Strict).ok());
}

TEST_CASE("generation of F(P x Q)") {
  auto pi = [](const Poset& p) {
    std::vector<LatticeElem> out;
    for (const auto& t : enumerate_pi(p)) out.push_back(LatticeElem{{t}});
    return out;
  };
  auto c2 = posets::chain(2);
  auto a2 = posets::antichain(2);
  CHECK(product_generation_check(c2, c2, pi(*c2), pi(*c2)));
  std::vector<LatticeElem> xs{LatticeElem{{ProductTerm{ElemSet::single(0)}}}, LatticeElem{{ProductTerm{ElemSet::single(1)}}}};
  CHECK(product_generation_check(a2, c2, xs, pi(*c2)));
  std::vector<LatticeElem> unit{LatticeElem{{ProductTerm{}}}};
  CHECK(kind_of([&] { product_generation_check(a2, c2, unit, pi(*c2)); }) == ErrorKind::PremiseFailed);
}

TEST_CASE("lexicographic layering") {
  auto c2 = posets::chain(2);
  auto rep = lex_layering_check(c2, {posets::antichain(2), posets::antichain(2)});
  CHECK(rep.holds);
  CHECK(rep.pairs_checked > 0);
  // x_a + x_b in the lower block sits strictly below x_a · x_b in the upper one.
  auto lex = posets::lex_sum(*c2, {posets::antichain(2), posets::antichain(2)});
  auto low = join(AlgebraElem::gen(lex, 0), AlgebraElem::gen(lex, 1));
  auto high = meet(AlgebraElem::gen(lex, 2), AlgebraElem::gen(lex, 3));
  CHECK(leq(low, high));
  CHECK_FALSE(equals(low, high));

  CHECK(lex_layering_check(c2, {posets::chain(1), posets::chain(1)}).holds);
  auto vac = lex_layering_check(posets::antichain(2), {posets::v3(), posets::chain(2)});
  CHECK(vac.holds);
  CHECK(vac.pairs_checked == 0);
}

TEST_CASE("H construction") {
  auto v3 = posets::v3();
  auto h = h_construction(v3, {v3->index_of("c")});
  CHECK(h.generates);
  CHECK(h.layering);
  CHECK(h.steps_ok);
  REQUIRE(h.layers.size() == 1);
  CHECK(h.layers[0].size() == 4);
  // H_0 = {y · x_c : y in Pi({a, b})}, so every member is below x_c.
  auto xc = AlgebraElem::gen(v3, v3->index_of("c"));
  for (const auto& y : h.layers[0]) CHECK(leq(y, xc));
  std::vector<Clopen> gens;
  StoneSpace s(v3);
  for (const auto& e : h.h) gens.push_back(denote(s, e));
  CHECK(subalgebra_closure(s, gens).size() == 32);

  auto c3 = posets::chain(3);
  auto hc = h_construction(c3, {0, 1, 2});
  CHECK(hc.generates);
  CHECK(hc.layering);

  auto a2 = posets::antichain(2);
  CHECK(kind_of([&] { h_construction(a2, {0}); }) == ErrorKind::NotCofinal);
  CHECK(kind_of([&] { h_construction(c3, {1, 0, 2}); }) == ErrorKind::PremiseFailed);
}

TEST_CASE("property: H construction on every directed poset up to 5 elements") {
  for (const auto& p : corpus::up_to(5)) {
    auto top = top_element(*p);
    CHECK(top.has_value() == is_directed(*p));
    if (!top) continue;
    auto chains = maximal_chains_to(*p, *top);
    CHECK_FALSE(chains.empty());
    for (const auto& chain : chains) {
      CHECK(chain.back() == *top);
      auto h = h_construction(p, chain);
      CHECK(h.generates);
      CHECK(h.layering);
      CHECK(h.steps_ok);
    }
  }
}
