#include "pal/poset.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "pal/error.hpp"

namespace pal {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Cycle: return "cycle";
    case ErrorKind::DuplicateName: return "duplicate-name";
    case ErrorKind::UnknownElement: return "unknown-element";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::EnumerationOverflow: return "enumeration-overflow";
    case ErrorKind::ClosureOverflow: return "closure-overflow";
    case ErrorKind::PosetMismatch: return "poset-mismatch";
    case ErrorKind::NotUpClosed: return "not-up-closed";
    case ErrorKind::BadArity: return "bad-arity";
    case ErrorKind::NotOrderPreserving: return "not-order-preserving";
    case ErrorKind::NotAnEmbedding: return "not-an-embedding";
    case ErrorKind::PremiseFailed: return "premise-failed";
    case ErrorKind::NotDirected: return "not-directed";
    case ErrorKind::NotCofinal: return "not-cofinal";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Poset::Poset(std::string name, std::vector<std::string> names, std::vector<ElemSet> up)
    : name_(std::move(name)), names_(std::move(names)), up_(std::move(up)), down_(names_.size()) {
  for (std::size_t p = 0; p < up_.size(); ++p) up_[p].for_each([&](std::size_t q) { down_[q].set(p); });
}

PosetPtr Poset::build(std::string name, std::vector<std::string> names, const Relation& relations) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second)
      throw Error(ErrorKind::DuplicateName, "duplicate element name '" + names[i] + "'", {names[i]});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + a + "'", {a});
    if (ib == index.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + b + "'", {b});
    pairs.emplace_back(ia->second, ib->second);
  }
  return build(std::move(name), std::move(names), pairs);
}

PosetPtr Poset::build(std::string name, std::vector<std::string> names,
                      const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  const std::size_t n = names.size();
  if (n > kMaxElements)
    throw Error(ErrorKind::SizeLimit, "poset has " + std::to_string(n) + " elements; limit is " +
                                          std::to_string(kMaxElements));
  {
    std::unordered_set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second) throw Error(ErrorKind::DuplicateName, "duplicate element name '" + s + "'", {s});
  }
  std::vector<ElemSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw Error(ErrorKind::UnknownElement, "relation references unknown id");
    up[a].set(b);
  }
  // Warshall over rows: if k in up[i], then up[k] is contained in up[i].
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up[i].test(j) && up[j].test(i))
        throw Error(ErrorKind::Cycle, "relation closure is not antisymmetric: " + names[i] + " and " + names[j],
                    {names[i], names[j]});
  return PosetPtr(new Poset(std::move(name), std::move(names), std::move(up)));
}

const std::string& Poset::element_name(std::size_t p) const {
  if (p >= size()) throw Error(ErrorKind::UnknownElement, "unknown element id " + std::to_string(p));
  return names_[p];
}

std::size_t Poset::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + name + "'", {name});
  return static_cast<std::size_t>(it - names_.begin());
}

bool Poset::leq(std::size_t p, std::size_t q) const {
  if (p >= size() || q >= size()) throw Error(ErrorKind::UnknownElement, "unknown element id");
  return up_[p].test(q);
}

const ElemSet& Poset::above(std::size_t p) const {
  if (p >= size()) throw Error(ErrorKind::UnknownElement, "unknown element id " + std::to_string(p));
  return up_[p];
}

const ElemSet& Poset::below(std::size_t p) const {
  if (p >= size()) throw Error(ErrorKind::UnknownElement, "unknown element id " + std::to_string(p));
  return down_[p];
}

void Poset::check_ids(const ElemSet& s) const {
  if (!s.subset_of(all())) throw Error(ErrorKind::UnknownElement, "element set references ids outside the poset");
}

ElemSet Poset::upset(const ElemSet& s) const {
  check_ids(s);
  ElemSet r;
  s.for_each([&](std::size_t p) { r |= up_[p]; });
  return r;
}

ElemSet Poset::downset(const ElemSet& s) const {
  check_ids(s);
  ElemSet r;
  s.for_each([&](std::size_t p) { r |= down_[p]; });
  return r;
}

ElemSet Poset::minimals(const ElemSet& s) const {
  check_ids(s);
  ElemSet r;
  s.for_each([&](std::size_t p) {
    ElemSet strictly_below = down_[p];
    strictly_below.reset(p);
    if (!strictly_below.intersects(s)) r.set(p);
  });
  return r;
}

ElemSet Poset::maximals(const ElemSet& s) const {
  check_ids(s);
  ElemSet r;
  s.for_each([&](std::size_t p) {
    ElemSet strictly_above = up_[p];
    strictly_above.reset(p);
    if (!strictly_above.intersects(s)) r.set(p);
  });
  return r;
}

bool Poset::is_antichain(const ElemSet& s) const { return minimals(s) == s; }

bool Poset::is_chain() const {
  for (std::size_t p = 0; p < size(); ++p)
    if ((up_[p] | down_[p]) != all()) return false;
  return true;
}

std::size_t Poset::strict_pairs() const {
  std::size_t c = 0;
  for (const auto& u : up_) c += u.count() - 1;
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < size(); ++p) {
    ElemSet strictly_above = up_[p];
    strictly_above.reset(p);
    minimals(strictly_above).for_each([&](std::size_t q) { edges.emplace_back(p, q); });
  }
  return edges;
}

ElemSet Poset::set_of(const std::vector<std::string>& names) const {
  ElemSet s;
  for (const auto& n : names) s.set(index_of(n));
  return s;
}

std::vector<std::string> Poset::names_of(const ElemSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t p) { out.push_back(element_name(p)); });
  return out;
}

bool same_poset(const PosetPtr& a, const PosetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void throw_overflow(std::size_t cap) {
  throw Error(ErrorKind::EnumerationOverflow, "segment enumeration exceeded cap " + std::to_string(cap));
}

std::vector<ElemSet> scan_segments(const Poset& p, bool up, std::size_t cap) {
  const std::size_t n = p.size();
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    ElemSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1ULL) s.set(i);
    if (up ? p.is_up_closed(s) : p.is_down_closed(s)) {
      if (out.size() == cap) throw_overflow(cap);
      out.push_back(s);
    }
  }
  return out;
}

// Decide elements from the top of a linear extension downward; an element may
// join the up-set only when everything above it already has.
void branch_upsets(const Poset& p, const std::vector<std::size_t>& top_down, std::size_t k, ElemSet& current,
                   std::vector<ElemSet>& out, std::size_t cap) {
  if (k == top_down.size()) {
    if (out.size() == cap) throw_overflow(cap);
    out.push_back(current);
    return;
  }
  std::size_t e = top_down[k];
  branch_upsets(p, top_down, k + 1, current, out, cap);
  ElemSet strictly_above = p.above(e);
  strictly_above.reset(e);
  if (strictly_above.subset_of(current)) {
    current.set(e);
    branch_upsets(p, top_down, k + 1, current, out, cap);
    current.reset(e);
  }
}

std::vector<std::size_t> by_height_descending(const Poset& p) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) order[i] = i;
  // |above| strictly decreases along p < q, so ascending |above| is top-down.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.above(a).count() < p.above(b).count(); });
  return order;
}

}  // namespace

std::vector<ElemSet> final_segments_branching(const Poset& p, std::size_t cap) {
  std::vector<ElemSet> out;
  ElemSet current;
  branch_upsets(p, by_height_descending(p), 0, current, out, cap);
  return out;
}

std::vector<ElemSet> final_segments(const Poset& p, std::size_t cap) {
  auto out = p.size() <= 20 ? scan_segments(p, true, cap) : final_segments_branching(p, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> initial_segments(const Poset& p, std::size_t cap) {
  std::vector<ElemSet> out;
  if (p.size() <= 20) {
    out = scan_segments(p, false, cap);
  } else {
    for (const auto& u : final_segments_branching(p, cap)) out.push_back(p.all() - u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinearAugmentation linear_augmentation(const Poset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = p.size();
  LinearAugmentation out;
  out.position.assign(n, 0);
  ElemSet placed;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::size_t> ready;
    for (std::size_t e = 0; e < n; ++e) {
      if (placed.test(e)) continue;
      ElemSet strictly_below = p.below(e);
      strictly_below.reset(e);
      if (strictly_below.subset_of(placed)) ready.push_back(e);
    }
    std::size_t pick = ready.size() == 1 ? ready[0]
                                         : ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
    out.position[pick] = out.order.size();
    out.order.push_back(pick);
    placed.set(pick);
  }
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(p.element_name(out.order[i]));
    if (i + 1 < n) rel.emplace_back(i, i + 1);
  }
  out.chain = Poset::build("aug(" + p.name() + ")", std::move(names), rel);
  return out;
}

namespace posets {

namespace {

void check_size(std::size_t n, std::size_t max_size) {
  if (n > max_size || n > kMaxElements)
    throw Error(ErrorKind::SizeLimit, "construction would produce " + std::to_string(n) + " elements; cap is " +
                                          std::to_string(std::min(max_size, kMaxElements)));
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

PosetPtr chain(std::size_t n) {
  check_size(n, kMaxElements);
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i + 1 < n) rel.emplace_back(i, i + 1);
  }
  return Poset::build("chain(" + std::to_string(n) + ")", std::move(names), rel);
}

PosetPtr antichain(std::size_t n) {
  check_size(n, kMaxElements);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Poset::build("antichain(" + std::to_string(n) + ")", std::move(names),
                      std::vector<std::pair<std::size_t, std::size_t>>{});
}

PosetPtr dual(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < p.size(); ++a) p.above(a).for_each([&](std::size_t b) { rel.emplace_back(b, a); });
  return Poset::build("dual(" + p.name() + ")", p.names(), rel);
}

PosetPtr disjoint_sum(const std::vector<PosetPtr>& parts) {
  auto index = antichain(parts.size());
  return lex_sum(*index, parts);
}

PosetPtr lex_sum(const Poset& index, const std::vector<PosetPtr>& parts, std::size_t max_size) {
  if (parts.size() != index.size())
    throw Error(ErrorKind::SizeLimit, "lex_sum needs one part per index element");
  std::size_t total = 0;
  for (const auto& part : parts) total += part->size();
  check_size(total, max_size);
  std::vector<std::string> names;
  std::vector<std::size_t> offset;
  for (std::size_t x = 0; x < parts.size(); ++x) {
    offset.push_back(names.size());
    for (const auto& nm : parts[x]->names()) names.push_back(pair_name(index.element_name(x), nm));
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t x = 0; x < parts.size(); ++x) {
    const Poset& px = *parts[x];
    for (std::size_t a = 0; a < px.size(); ++a) {
      px.above(a).for_each([&](std::size_t b) { rel.emplace_back(offset[x] + a, offset[x] + b); });
      for (std::size_t y = 0; y < parts.size(); ++y)
        if (index.lt(x, y))
          for (std::size_t b = 0; b < parts[y]->size(); ++b) rel.emplace_back(offset[x] + a, offset[y] + b);
    }
  }
  std::string nm = "lex(" + index.name();
  for (const auto& part : parts) nm += ";" + part->name();
  return Poset::build(nm + ")", std::move(names), rel);
}

PosetPtr product(const Poset& a, const Poset& b, std::size_t max_size) {
  check_size(a.size() * b.size(), max_size);
  std::vector<std::string> names;
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) names.push_back(pair_name(a.element_name(p), b.element_name(q)));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  const std::size_t m = b.size();
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = 0; q < m; ++q)
      a.above(p).for_each([&](std::size_t p2) {
        b.above(q).for_each([&](std::size_t q2) { rel.emplace_back(p * m + q, p2 * m + q2); });
      });
  return Poset::build(a.name() + "x" + b.name(), std::move(names), rel);
}

PosetPtr rado_prefix(std::size_t n, std::size_t max_size) {
  check_size(n * (n + 1) / 2, max_size);
  std::vector<std::pair<std::size_t, std::size_t>> elems;
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      elems.emplace_back(i, j);
      names.push_back(pair_name(std::to_string(i), std::to_string(j)));
    }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      auto [i, j] = elems[a];
      auto [k, l] = elems[b];
      if ((i == k && j <= l) || j < k) rel.emplace_back(a, b);
    }
  return Poset::build("rado(" + std::to_string(n) + ")", std::move(names), rel);
}

PosetPtr random_poset(std::size_t n, double density, std::uint64_t seed, std::size_t max_size) {
  check_size(n, max_size);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(i, j);
  }
  return Poset::build("random(" + std::to_string(n) + "," + std::to_string(seed) + ")", std::move(names), rel);
}

PosetPtr v3() { return Poset::build("V3", {"a", "b", "c"}, Poset::Relation{{"a", "c"}, {"b", "c"}}); }

}  // namespace posets

}  // namespace pal
