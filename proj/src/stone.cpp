#include "pal/stone.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "pal/error.hpp"

namespace pal {

StoneSpace::StoneSpace(PosetPtr p, std::size_t cap) : poset_(std::move(p)), points_(final_segments(*poset_, cap)) {
  for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

std::optional<std::size_t> StoneSpace::index_of(const ElemSet& segment) const {
  auto it = index_.find(segment);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Clopen v_set(const StoneSpace& space, std::size_t p) {
  if (p >= space.poset()->size()) throw Error(ErrorKind::UnknownElement, "unknown element id " + std::to_string(p));
  Clopen c = space.empty();
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.points()[i].test(p)) c.set(i);
  return c;
}

Clopen denote(const StoneSpace& space, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Zero: return space.empty();
    case Expr::Kind::One: return space.full();
    case Expr::Kind::Gen: return v_set(space, e.gen);
    case Expr::Kind::Not: return ~denote(space, e.args[0]);
    case Expr::Kind::And: return denote(space, e.args[0]) & denote(space, e.args[1]);
    case Expr::Kind::Or: return denote(space, e.args[0]) | denote(space, e.args[1]);
  }
  return space.empty();
}

Clopen denote(const StoneSpace& space, const AlgebraElem& e) {
  if (!same_poset(space.poset(), e.poset()))
    throw Error(ErrorKind::PosetMismatch, "element and space belong to different posets");
  Clopen c = space.empty();
  for (std::size_t i = 0; i < space.size(); ++i)
    if (e.eval(space.points()[i])) c.set(i);
  return c;
}

AlgebraElem element_of(const StoneSpace& space, const Clopen& c) {
  return AlgebraElem::tabulate(space.poset(), space.poset()->all(), [&](const ElemSet& segment) {
    return c.test(*space.index_of(segment));
  });
}

AlgebraElem element_of_mask(const StoneSpace& space, std::uint64_t mask) {
  Clopen c = space.empty();
  for (std::size_t i = 0; i < space.size(); ++i)
    if (mask >> i & 1ULL) c.set(i);
  return element_of(space, c);
}

std::vector<Clopen> subalgebra_closure(const StoneSpace& space, const std::vector<Clopen>& gens, std::size_t cap) {
  std::set<Clopen> members{space.empty(), space.full()};
  for (const auto& g : gens) {
    members.insert(g);
    members.insert(~g);
  }
  if (members.size() > cap)
    throw Error(ErrorKind::ClosureOverflow, "subalgebra closure exceeded cap " + std::to_string(cap));
  std::vector<Clopen> frontier(members.begin(), members.end());
  std::vector<Clopen> all = frontier;
  while (!frontier.empty()) {
    std::vector<Clopen> next;
    auto add = [&](Clopen c) {
      if (members.insert(c).second) {
        if (members.size() > cap)
          throw Error(ErrorKind::ClosureOverflow, "subalgebra closure exceeded cap " + std::to_string(cap));
        next.push_back(std::move(c));
      }
    };
    for (const auto& f : frontier) {
      for (std::size_t i = 0; i < all.size(); ++i) {
        add(f & all[i]);
        add(f | all[i]);
      }
      add(~f);
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

std::vector<Clopen> generated_atoms(const StoneSpace& space, const std::vector<Clopen>& gens) {
  // Points are equivalent when every generator agrees on them.
  std::map<std::vector<bool>, Clopen> cells;
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::vector<bool> signature;
    signature.reserve(gens.size());
    for (const auto& g : gens) signature.push_back(g.test(i));
    auto [it, inserted] = cells.try_emplace(std::move(signature), space.empty());
    it->second.set(i);
  }
  std::vector<Clopen> out;
  for (auto& [sig, cell] : cells) out.push_back(std::move(cell));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t generated_atom_count(const StoneSpace& space, const std::vector<Clopen>& gens) {
  return generated_atoms(space, gens).size();
}

bool generates(const StoneSpace& space, const std::vector<Clopen>& gens) {
  return generated_atom_count(space, gens) == space.size();
}

SubbaseReport check_binary_subbase(const PosetPtr& p, const SubbaseOptions& options) {
  StoneSpace space(p);
  const std::size_t n = p->size();
  std::vector<Clopen> family;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    family.push_back(v_set(space, i));
    labels.push_back("V_" + p->element_name(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    family.push_back(~family[i]);
    labels.push_back("-V_" + p->element_name(i));
  }
  const std::size_t m = family.size();
  std::vector<std::vector<bool>> disjoint(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) disjoint[i][j] = !family[i].intersects(family[j]);

  SubbaseReport report;
  auto check = [&](const std::vector<std::size_t>& members) {
    ++report.subfamilies_checked;
    Clopen meet_all = space.full();
    for (auto i : members) meet_all &= family[i];
    if (!meet_all.none()) return true;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a; b < members.size(); ++b)
        if (disjoint[members[a]][members[b]]) return true;
    report.holds = false;
    for (auto i : members) report.witness.push_back(labels[i]);
    return false;
  };

  if (n <= options.exhaustive_max) {
    for (std::uint64_t mask = 1; mask < (1ULL << m); ++mask) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1ULL) members.push_back(i);
      if (!check(members)) break;
    }
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < m; ++i)
        if (coin(rng)) members.push_back(i);
      if (members.empty()) continue;
      if (!check(members)) break;
    }
  }
  return report;
}

IntervalAlgebraReport interval_algebra_check(const Poset& chain) {
  if (chain.size() == 0 || !chain.is_chain())
    throw Error(ErrorKind::PremiseFailed, "interval algebra check needs a nonempty finite chain");
  const std::size_t n = chain.size();
  // Chain positions: rank = number of elements strictly below.
  std::vector<std::size_t> by_rank(n);
  for (std::size_t e = 0; e < n; ++e) by_rank[chain.below(e).count() - 1] = e;

  // B(L) inside the power set of L, points indexed by rank.
  auto ray = [&](std::size_t rank) {
    Bits r(n);
    for (std::size_t k = rank; k < n; ++k) r.set(k);
    return r;
  };
  std::vector<Bits> rays;
  for (std::size_t k = 0; k < n; ++k) rays.push_back(ray(k));
  std::map<std::vector<bool>, Bits> cells;
  for (std::size_t pt = 0; pt < n; ++pt) {
    std::vector<bool> sig;
    for (const auto& r : rays) sig.push_back(r.test(pt));
    auto [it, ins] = cells.try_emplace(sig, Bits(n));
    it->second.set(pt);
  }
  std::set<Bits> interval_atoms;
  for (auto& [sig, cell] : cells) interval_atoms.insert(cell);

  // F(L') with L' = L minus its minimum; ranks 1..n-1 become 0..n-2.
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t k = 1; k < n; ++k) {
    names.push_back(chain.element_name(by_rank[k]));
    if (k + 1 < n) rel.emplace_back(k - 1, k);
  }
  auto rest = Poset::build("rest", names, rel);
  StoneSpace space(rest);

  IntervalAlgebraReport report;
  report.interval_atoms = interval_atoms.size();
  report.poset_atoms = space.size();

  // Image of the atom of F(L') at point R under x_a -> L \ [a,->).
  bool ok = report.interval_atoms == report.poset_atoms;
  std::set<Bits> images;
  Bits covered(n);
  for (const auto& segment : space.points()) {
    Bits image(n, true);
    for (std::size_t i = 0; i < rest->size(); ++i) {
      const Bits& r = rays[i + 1];
      image &= segment.test(i) ? ~r : r;
    }
    if (image.none() || !interval_atoms.count(image) || covered.intersects(image)) ok = false;
    covered |= image;
    images.insert(image);
  }
  report.isomorphic = ok && covered.all() && images == interval_atoms;
  return report;
}

}  // namespace pal
