#include "pal/morphisms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "pal/error.hpp"

namespace pal {

Hom::Hom(PosetPtr source, PosetPtr target, std::vector<AlgebraElem> gen_image)
    : source_(std::move(source)), target_(std::move(target)), gen_image_(std::move(gen_image)) {
  if (gen_image_.size() != source_->size())
    throw Error(ErrorKind::PremiseFailed, "homomorphism needs one image per generator");
  for (const auto& g : gen_image_)
    if (!same_poset(g.poset(), target_)) throw Error(ErrorKind::PosetMismatch, "generator image outside target");
}

AlgebraElem Hom::apply(const AlgebraElem& e) const {
  if (!same_poset(e.poset(), source_)) throw Error(ErrorKind::PosetMismatch, "element outside the domain");
  AlgebraElem acc = AlgebraElem::zero(target_);
  for (const auto& prod : to_dnf(e)) {
    AlgebraElem term = AlgebraElem::one(target_);
    prod.pos.for_each([&](std::size_t p) { term = meet(term, gen_image_[p]); });
    prod.neg.for_each([&](std::size_t q) { term = difference(term, gen_image_[q]); });
    acc = join(acc, term);
  }
  return acc;
}

AlgebraElem Hom::apply_by_atoms(const AlgebraElem& e) const {
  if (!same_poset(e.poset(), source_)) throw Error(ErrorKind::PosetMismatch, "element outside the domain");
  AlgebraElem acc = AlgebraElem::zero(target_);
  for (const auto& segment : final_segments(*source_)) {
    if (!e.eval(segment)) continue;
    AlgebraElem atom = AlgebraElem::one(target_);
    for (std::size_t p = 0; p < source_->size(); ++p)
      atom = segment.test(p) ? meet(atom, gen_image_[p]) : difference(atom, gen_image_[p]);
    acc = join(acc, atom);
  }
  return acc;
}

Hom extend_hom(const PosetPtr& p, const PosetPtr& target, std::vector<AlgebraElem> f) {
  Hom h(p, target, std::move(f));
  for (std::size_t a = 0; a < p->size(); ++a)
    p->above(a).for_each([&](std::size_t b) {
      if (!leq(h.gen_image()[a], h.gen_image()[b]))
        throw Error(ErrorKind::NotOrderPreserving,
                    "map is not order-preserving: " + p->element_name(a) + " <= " + p->element_name(b) +
                        " but f(" + p->element_name(a) + ") is not below f(" + p->element_name(b) + ")",
                    {p->element_name(a), p->element_name(b)});
    });
  return h;
}

HomLawReport check_hom_laws(const Hom& h, bool check_unique, std::size_t pairwise_limit, std::uint64_t seed) {
  HomLawReport report;
  const Poset& src = *h.source();
  auto fail = [&](std::string msg) {
    if (report.ok) report.failure = std::move(msg);
    report.ok = false;
  };
  for (std::size_t p = 0; p < src.size(); ++p) {
    AlgebraElem g = AlgebraElem::gen(h.source(), p);
    if (!equals(h.apply(g), h.gen_image()[p])) fail("h(x_" + src.element_name(p) + ") != f(" + src.element_name(p) + ")");
    if (check_unique && !equals(h.apply_by_atoms(g), h.gen_image()[p]))
      fail("atom route disagrees at x_" + src.element_name(p));
  }
  StoneSpace source_space(h.source());
  StoneSpace target_space(h.target());
  const std::size_t points = source_space.size();

  std::vector<Clopen> atom_image;
  Clopen covered = target_space.empty();
  for (std::size_t i = 0; i < points; ++i) {
    AlgebraElem atom = AlgebraElem::point(h.source(), source_space.points()[i]);
    Clopen img = denote(target_space, h.apply(atom));
    if (img.intersects(covered)) fail("atom images overlap");
    if (check_unique && denote(target_space, h.apply_by_atoms(atom)) != img)
      fail("apply and apply_by_atoms disagree on an atom");
    covered |= img;
    atom_image.push_back(std::move(img));
  }
  if (!covered.all()) fail("atom images do not cover the target");

  auto expected_image = [&](const Clopen& elem) {
    Clopen out = target_space.empty();
    elem.for_each([&](std::size_t i) { out |= atom_image[i]; });
    return out;
  };

  std::vector<Clopen> image;
  if (points <= 16) {
    const std::uint64_t n = 1ULL << points;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
      Clopen elem = source_space.empty();
      for (std::size_t i = 0; i < points; ++i)
        if (mask >> i & 1ULL) elem.set(i);
      Clopen img = denote(target_space, h.apply(element_of(source_space, elem)));
      if (img != expected_image(elem)) fail("image is not the join of its atoms' images");
      ++report.elements_checked;
      if (n <= pairwise_limit) image.push_back(std::move(img));
    }
    if (n <= pairwise_limit) {
      const std::uint64_t full = n - 1;
      for (std::uint64_t a = 0; a < n; ++a) {
        if (image[full & ~a] != ~image[a]) fail("complement law fails");
        for (std::uint64_t b = 0; b < n; ++b) {
          if (image[a & b] != (image[a] & image[b])) fail("meet law fails");
          if (image[a | b] != (image[a] | image[b])) fail("join law fails");
        }
      }
    }
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t s = 0; s < 256; ++s) {
      Clopen elem = source_space.empty();
      for (std::size_t i = 0; i < points; ++i)
        if (coin(rng)) elem.set(i);
      Clopen img = denote(target_space, h.apply(element_of(source_space, elem)));
      if (img != expected_image(elem)) fail("image is not the join of its atoms' images");
      ++report.elements_checked;
    }
  }
  return report;
}

PosetPtr induced_subposet(const Poset& p, const ElemSet& ids, std::string name) {
  auto list = ids.ids();
  std::vector<std::string> names;
  for (auto i : list) names.push_back(p.element_name(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = 0; b < list.size(); ++b)
      if (a != b && p.leq(list[a], list[b])) rel.emplace_back(a, b);
  return Poset::build(std::move(name), std::move(names), rel);
}

Hom subposet_embedding(const PosetPtr& q, const PosetPtr& p, const std::vector<std::size_t>& inclusion) {
  if (inclusion.size() != q->size()) throw Error(ErrorKind::NotAnEmbedding, "inclusion must map every element of Q");
  for (auto i : inclusion)
    if (i >= p->size()) throw Error(ErrorKind::NotAnEmbedding, "inclusion maps outside P");
  for (std::size_t a = 0; a < q->size(); ++a)
    for (std::size_t b = 0; b < q->size(); ++b) {
      if (a != b && inclusion[a] == inclusion[b])
        throw Error(ErrorKind::NotAnEmbedding, "inclusion is not injective",
                    {q->element_name(a), q->element_name(b)});
      if (q->leq(a, b) != p->leq(inclusion[a], inclusion[b]))
        throw Error(ErrorKind::NotAnEmbedding,
                    "inclusion does not reflect the order at " + q->element_name(a) + ", " + q->element_name(b),
                    {q->element_name(a), q->element_name(b)});
    }
  std::vector<AlgebraElem> images;
  for (auto i : inclusion) images.push_back(AlgebraElem::gen(p, i));
  return Hom(q, p, std::move(images));
}

InjectivityReport check_embedding(const Hom& h) {
  InjectivityReport report;
  report.injective = true;
  for (const auto& segment : final_segments(*h.source()))
    if (is_zero(h.apply(AlgebraElem::point(h.source(), segment)))) report.injective = false;
  report.lattice_into_lattice = true;
  for (const auto& l : enumerate_l(*h.source()))
    if (!to_lattice(h.apply(to_algebra(h.source(), l)))) report.lattice_into_lattice = false;
  return report;
}

RelativizeReport relativize(const PosetPtr& p, std::size_t q) {
  RelativizeReport report;
  const ElemSet kept = p->all() - p->above(q);
  report.q = induced_subposet(*p, kept, "rel(" + p->name() + "," + p->element_name(q) + ")");
  report.inclusion = kept.ids();
  Hom emb = subposet_embedding(report.q, p, report.inclusion);
  const AlgebraElem xq = AlgebraElem::gen(p, q);
  auto f = [&](const AlgebraElem& y) { return meet(emb.apply(y), xq); };

  StoneSpace qs(report.q);
  StoneSpace ps(p);
  const Clopen vq = v_set(ps, q);
  report.source_atoms = qs.size();
  report.target_atoms = vq.count();
  report.unit_ok = equals(f(AlgebraElem::one(report.q)), xq);

  // Bijective onto F(P)|x_q iff atoms go to distinct single points of V_q
  // and the counts match.
  std::set<std::size_t> hit;
  bool atoms_ok = report.source_atoms == report.target_atoms;
  std::vector<AlgebraElem> atoms;
  for (const auto& segment : qs.points()) {
    atoms.push_back(AlgebraElem::point(report.q, segment));
    Clopen img = denote(ps, f(atoms.back()));
    if (img.count() != 1 || !img.subset_of(vq)) {
      atoms_ok = false;
      continue;
    }
    img.for_each([&](std::size_t i) {
      if (!hit.insert(i).second) atoms_ok = false;
    });
  }
  report.bijective = atoms_ok && hit.size() == report.target_atoms;

  // Relative homomorphism equations: on every element when F(Q) is small,
  // otherwise on generators and atoms.
  std::vector<AlgebraElem> sample;
  if (qs.size() <= 6) {
    for (std::uint64_t m = 0; m < (1ULL << qs.size()); ++m) sample.push_back(element_of_mask(qs, m));
  } else {
    sample = atoms;
    for (std::size_t i = 0; i < report.q->size(); ++i) sample.push_back(AlgebraElem::gen(report.q, i));
  }
  bool hom = true;
  std::vector<AlgebraElem> images;
  for (const auto& y : sample) images.push_back(f(y));
  for (std::size_t i = 0; i < sample.size() && hom; ++i) {
    if (!equals(f(complement(sample[i])), difference(xq, images[i]))) hom = false;
    for (std::size_t j = 0; j < sample.size() && hom; ++j) {
      if (!equals(f(meet(sample[i], sample[j])), meet(images[i], images[j]))) hom = false;
      if (!equals(f(join(sample[i], sample[j])), join(images[i], images[j]))) hom = false;
    }
  }
  report.homomorphism = hom;
  return report;
}

ChainEpiReport chain_epimorphism(const PosetPtr& p, const LinearAugmentation& aug, Strictness strictness) {
  ChainEpiReport report;
  std::vector<AlgebraElem> images;
  for (std::size_t e = 0; e < p->size(); ++e) images.push_back(AlgebraElem::gen(aug.chain, aug.position[e]));
  Hom h = extend_hom(p, aug.chain, std::move(images));

  StoneSpace cs(aug.chain);
  std::vector<Clopen> gens;
  for (const auto& g : h.gen_image()) gens.push_back(denote(cs, g));
  report.surjective = generates(cs, gens);

  std::set<LatticeElem> image;
  for (const auto& l : enumerate_l(*p, strictness)) {
    auto back = to_lattice(h.apply(to_algebra(p, l)));
    if (!back) {
      report.lattice_image_ok = false;
      report.hom = h;
      return report;
    }
    image.insert(*back);
  }
  auto lc = enumerate_l(*aug.chain, strictness);
  report.lattice_image_ok = image == std::set<LatticeElem>(lc.begin(), lc.end());

  std::set<LatticeElem> expected;
  for (std::size_t c = 0; c < aug.chain->size(); ++c) expected.insert(LatticeElem{{ProductTerm{ElemSet::single(c)}}});
  if (strictness == Strictness::Inclusive) expected.insert(LatticeElem{{ProductTerm{}}});
  report.chain_lattice_ok = expected == std::set<LatticeElem>(lc.begin(), lc.end());
  report.hom = h;
  return report;
}

// ---------------------------------------------------------------------------

EMap::EMap(PosetPtr p, PosetPtr q) : p_(std::move(p)), q_(std::move(q)), pq_(posets::product(*p_, *q_)) {
  const std::size_t m = q_->size();
  for (std::size_t b = 0; b < m; ++b) {
    std::vector<AlgebraElem> images;
    for (std::size_t a = 0; a < p_->size(); ++a) images.push_back(AlgebraElem::gen(pq_, a * m + b));
    f_hat_.push_back(extend_hom(p_, pq_, std::move(images)));
  }
}

Hom EMap::g_hat(const AlgebraElem& a) const {
  std::vector<AlgebraElem> images;
  for (std::size_t b = 0; b < q_->size(); ++b) images.push_back(f_hat_[b].apply(a));
  return extend_hom(q_, pq_, std::move(images));
}

AlgebraElem EMap::operator()(const AlgebraElem& a, const AlgebraElem& b) const { return g_hat(a).apply(b); }

AlgebraElem EMap::operator()(const LatticeElem& a, const LatticeElem& b) const {
  return (*this)(to_algebra(p_, a), to_algebra(q_, b));
}

EMapReport verify_e_map(const PosetPtr& p, const PosetPtr& q, Strictness strictness) {
  EMapReport report;
  EMap e(p, q);
  const std::size_t m = q->size();
  auto fail = [&](bool& flag, std::string msg) {
    if (report.failure.empty()) report.failure = std::move(msg);
    flag = false;
  };

  for (std::size_t a = 0; a < p->size(); ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (!equals(e(AlgebraElem::gen(p, a), AlgebraElem::gen(q, b)), AlgebraElem::gen(e.product(), a * m + b)))
        fail(report.generator_equation,
             "E(x_" + p->element_name(a) + ", x_" + q->element_name(b) + ") is not the product generator");

  std::vector<AlgebraElem> lp, lq;
  for (const auto& l : enumerate_l(*p, strictness)) lp.push_back(to_algebra(p, l));
  for (const auto& l : enumerate_l(*q, strictness)) lq.push_back(to_algebra(q, l));
  auto lp_terms = enumerate_l(*p, strictness);

  std::vector<std::vector<AlgebraElem>> table(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i) {
    Hom g = e.g_hat(lp[i]);
    for (std::size_t j = 0; j < lq.size(); ++j) {
      table[i].push_back(g.apply(lq[j]));
      ++report.pairs_checked;
      if (!to_lattice(table[i].back()))
        fail(report.lands_in_lattice, "E(" + format_lattice(*p, lp_terms[i]) + ", .) leaves L(PxQ)");
    }
    // b -> E(a, b) against the homomorphism fixed by its generator values.
    std::vector<AlgebraElem> gens;
    for (std::size_t b = 0; b < m; ++b) gens.push_back(e(lp[i], AlgebraElem::gen(q, b)));
    Hom ext = extend_hom(q, e.product(), std::move(gens));
    for (std::size_t j = 0; j < lq.size(); ++j)
      if (!equals(ext.apply_by_atoms(lq[j]), table[i][j]))
        fail(report.right_extends, "b -> E(" + format_lattice(*p, lp_terms[i]) + ", b) is not a homomorphism");
    for (std::size_t j1 = 0; j1 < lq.size(); ++j1)
      for (std::size_t j2 = 0; j2 < lq.size(); ++j2) {
        if (!equals(g.apply(join(lq[j1], lq[j2])), join(table[i][j1], table[i][j2])))
          fail(report.right_extends, "b -> E(a, b) does not preserve joins");
        if (!equals(g.apply(meet(lq[j1], lq[j2])), meet(table[i][j1], table[i][j2])))
          fail(report.right_extends, "b -> E(a, b) does not preserve meets");
      }
  }

  for (std::size_t b = 0; b < m; ++b) {
    std::vector<AlgebraElem> gens;
    for (std::size_t a = 0; a < p->size(); ++a) gens.push_back(e(AlgebraElem::gen(p, a), AlgebraElem::gen(q, b)));
    Hom ext = extend_hom(p, e.product(), std::move(gens));
    for (std::size_t i = 0; i < lp.size(); ++i)
      if (!equals(ext.apply_by_atoms(lp[i]), e(lp[i], AlgebraElem::gen(q, b))))
        fail(report.left_extends, "a -> E(a, x_" + q->element_name(b) + ") is not a homomorphism");
  }

  for (std::size_t j = 0; j < lq.size(); ++j)
    for (std::size_t i1 = 0; i1 < lp.size(); ++i1)
      for (std::size_t i2 = 0; i2 < lp.size(); ++i2)
        if (l_leq(*p, lp_terms[i1], lp_terms[i2]) && !leq(table[i1][j], table[i2][j]))
          fail(report.monotone, "E(., b) is not order-preserving at " + format_lattice(*p, lp_terms[i1]) + " <= " +
                                    format_lattice(*p, lp_terms[i2]));
  return report;
}

bool product_generation_check(const PosetPtr& p, const PosetPtr& q, const std::vector<LatticeElem>& a,
                              const std::vector<LatticeElem>& b) {
  StoneSpace ps(p), qs(q);
  std::vector<Clopen> ga, gb;
  for (const auto& l : a) ga.push_back(denote(ps, to_algebra(p, l)));
  for (const auto& l : b) gb.push_back(denote(qs, to_algebra(q, l)));
  if (!generates(ps, ga)) throw Error(ErrorKind::PremiseFailed, "A does not generate F(" + p->name() + ")");
  if (!generates(qs, gb)) throw Error(ErrorKind::PremiseFailed, "B does not generate F(" + q->name() + ")");
  EMap e(p, q);
  StoneSpace pqs(e.product());
  std::vector<Clopen> c;
  for (const auto& x : a) {
    Hom g = e.g_hat(to_algebra(p, x));
    for (const auto& y : b) c.push_back(denote(pqs, g.apply(to_algebra(q, y))));
  }
  return generates(pqs, c);
}

LayeringReport lex_layering_check(const PosetPtr& index, const std::vector<PosetPtr>& parts) {
  LayeringReport report;
  auto lex = posets::lex_sum(*index, parts);
  std::vector<std::vector<AlgebraElem>> layers;
  std::vector<std::vector<std::string>> labels;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    std::vector<std::size_t> inclusion;
    for (std::size_t i = 0; i < part->size(); ++i) inclusion.push_back(offset + i);
    Hom emb = subposet_embedding(part, lex, inclusion);
    std::vector<AlgebraElem> layer;
    std::vector<std::string> names;
    for (const auto& l : enumerate_l(*part, Strictness::Strict)) {
      layer.push_back(emb.apply(to_algebra(part, l)));
      names.push_back(format_lattice(*part, l));
    }
    layers.push_back(std::move(layer));
    labels.push_back(std::move(names));
    offset += part->size();
  }
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t y = 0; y < parts.size(); ++y) {
      if (!index->lt(x, y)) continue;
      for (std::size_t i = 0; i < layers[x].size(); ++i)
        for (std::size_t j = 0; j < layers[y].size(); ++j) {
          ++report.pairs_checked;
          const auto& g = layers[x][i];
          const auto& h = layers[y][j];
          if (!leq(g, h) || equals(g, h)) {
            report.holds = false;
            report.counterexample = labels[x][i] + " in part " + index->element_name(x) + " vs " + labels[y][j] +
                                    " in part " + index->element_name(y);
            return report;
          }
        }
    }
  return report;
}

// ---------------------------------------------------------------------------

bool is_directed(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (!p.above(a).intersects(p.above(b))) return false;
  return true;
}

std::optional<std::size_t> top_element(const Poset& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p.below(a) == p.all()) return a;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> maximal_chains_to(const Poset& p, std::size_t top) {
  std::vector<std::vector<std::size_t>> lower_covers(p.size());
  for (auto [a, b] : p.hasse_edges()) lower_covers[b].push_back(a);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path{top};
  auto walk = [&](auto& self, std::size_t cur) -> void {
    if (lower_covers[cur].empty()) {
      out.emplace_back(path.rbegin(), path.rend());
      return;
    }
    for (auto next : lower_covers[cur]) {
      path.push_back(next);
      self(self, next);
      path.pop_back();
    }
  };
  walk(walk, top);
  std::sort(out.begin(), out.end());
  return out;
}

HConstruction h_construction(const PosetPtr& p, const std::vector<std::size_t>& chain) {
  for (auto c : chain) p->element_name(c);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!p->lt(chain[i], chain[i + 1]))
      throw Error(ErrorKind::PremiseFailed, "chain is not strictly increasing at " + p->element_name(chain[i]));
  ElemSet chain_set;
  for (auto c : chain) chain_set.set(c);
  ElemSet uncovered = p->all() - p->downset(chain_set);
  if (!uncovered.empty()) {
    std::size_t w = uncovered.first();
    throw Error(ErrorKind::NotCofinal, "chain is not cofinal: " + p->element_name(w) + " is below no chain element",
                {p->element_name(w)});
  }
  // Implied by cofinality when P is finite.
  if (!is_directed(*p)) throw Error(ErrorKind::NotDirected, "poset " + p->name() + " is not directed");

  HConstruction out;
  StoneSpace space(p);
  bool steps = true;
  out.h.push_back(AlgebraElem::zero(p));
  for (std::size_t n = 0; n < chain.size(); ++n) {
    const AlgebraElem prev = n == 0 ? AlgebraElem::zero(p) : AlgebraElem::gen(p, chain[n - 1]);
    const AlgebraElem cur = AlgebraElem::gen(p, chain[n]);
    const AlgebraElem band = difference(cur, prev);  // x_p(n) - x_p(n-1)

    const ElemSet kept = p->all() - p->above(chain[n]);
    auto sub = induced_subposet(*p, kept, "P_" + std::to_string(n));
    const auto ids = kept.ids();
    std::vector<AlgebraElem> layer;
    std::vector<Clopen> restricted;
    // x_p(n) always sits in G_{n+1} = Pi(P_{n+1}), so no separate adjunction step is needed.
    for (const auto& term : enumerate_pi(*sub, Strictness::Inclusive)) {
      ElemSet sigma;
      term.sigma.for_each([&](std::size_t i) { sigma.set(ids[i]); });
      AlgebraElem y = to_algebra(p, ProductTerm{sigma});
      AlgebraElem fy = join(prev, meet(y, cur));
      if (!equals(meet(y, band), difference(fy, prev))) steps = false;
      restricted.push_back(denote(space, meet(y, band)));
      layer.push_back(fy);
    }
    // g[G_n] must separate the points of the band.
    Clopen region = denote(space, band);
    std::map<std::vector<bool>, std::size_t> cells;
    region.for_each([&](std::size_t pt) {
      std::vector<bool> sig;
      for (const auto& r : restricted) sig.push_back(r.test(pt));
      ++cells[sig];
    });
    if (cells.size() != region.count()) steps = false;

    out.h.insert(out.h.end(), layer.begin(), layer.end());
    out.layers.push_back(std::move(layer));
  }
  out.steps_ok = steps;

  bool layering = true;
  for (std::size_t m = 0; m < out.layers.size() && layering; ++m)
    for (std::size_t n = m + 1; n < out.layers.size() && layering; ++n) {
      const AlgebraElem xm = AlgebraElem::gen(p, chain[m]);
      const AlgebraElem xn1 = AlgebraElem::gen(p, chain[n - 1]);
      if (!leq(xm, xn1)) layering = false;
      for (const auto& hm : out.layers[m])
        if (!leq(hm, xm)) layering = false;
      for (const auto& hn : out.layers[n])
        if (!leq(xn1, hn)) layering = false;
    }
  out.layering = layering;

  std::vector<Clopen> gens;
  for (const auto& e : out.h) gens.push_back(denote(space, e));
  out.generates = generates(space, gens);
  return out;
}

}  // namespace pal
