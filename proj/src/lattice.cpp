#include "pal/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "pal/error.hpp"

namespace pal {

ProductTerm product_term(const Poset& p, const ElemSet& sigma) { return {p.minimals(sigma)}; }

bool pi_leq(const Poset& p, const ProductTerm& s, const ProductTerm& t) {
  return t.sigma.subset_of(p.upset(s.sigma));
}

LatticeElem l_elem(const Poset& p, std::vector<ProductTerm> terms) {
  for (auto& t : terms) t = product_term(p, t.sigma);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  LatticeElem out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < terms.size() && !dominated; ++j)
      if (i != j && pi_leq(p, terms[i], terms[j])) dominated = true;
    if (!dominated) out.terms.push_back(terms[i]);
  }
  return out;
}

LatticeElem l_join(const Poset& p, const LatticeElem& a, const LatticeElem& b) {
  std::vector<ProductTerm> terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return l_elem(p, std::move(terms));
}

LatticeElem l_meet(const Poset& p, const LatticeElem& a, const LatticeElem& b) {
  std::vector<ProductTerm> terms;
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) terms.push_back({s.sigma | t.sigma});
  return l_elem(p, std::move(terms));
}

bool l_leq(const Poset& p, const LatticeElem& a, const LatticeElem& b) {
  return std::all_of(a.terms.begin(), a.terms.end(), [&](const ProductTerm& s) {
    return std::any_of(b.terms.begin(), b.terms.end(), [&](const ProductTerm& t) { return pi_leq(p, s, t); });
  });
}

AlgebraElem to_algebra(const PosetPtr& p, const ProductTerm& t) { return elementary_product(p, t.sigma, ElemSet{}); }

AlgebraElem to_algebra(const PosetPtr& p, const LatticeElem& a) {
  ElemSet support;
  for (const auto& t : a.terms) support |= t.sigma;
  return AlgebraElem::tabulate(p, support, [&](const ElemSet& trace) {
    return std::any_of(a.terms.begin(), a.terms.end(),
                       [&](const ProductTerm& t) { return t.sigma.subset_of(trace); });
  });
}

std::optional<LatticeElem> to_lattice(const AlgebraElem& e) {
  AlgebraElem r = support_reduce(e);
  const Poset& p = *r.poset();
  auto traces = r.traces();
  std::vector<ElemSet> trues;
  for (const auto& t : traces)
    if (r.at_trace(t)) trues.push_back(t);
  for (const auto& t : trues)
    for (const auto& u : traces)
      if (t.subset_of(u) && !r.at_trace(u)) return std::nullopt;
  std::vector<ProductTerm> terms;
  for (const auto& t : trues) {
    bool minimal = std::none_of(trues.begin(), trues.end(),
                                [&](const ElemSet& u) { return u != t && u.subset_of(t); });
    if (minimal) terms.push_back({p.minimals(t)});
  }
  return l_elem(p, std::move(terms));
}

std::string format_term(const Poset& p, const ProductTerm& t) {
  if (t.sigma.empty()) return "1";
  std::string out = "x{";
  bool first = true;
  for (const auto& n : p.names_of(t.sigma)) {
    out += (first ? "" : ",") + n;
    first = false;
  }
  return out + "}";
}

std::string format_lattice(const Poset& p, const LatticeElem& a) {
  if (a.terms.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : a.terms) parts.push_back(format_term(p, t));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

namespace {

[[noreturn]] void overflow(const char* what, std::size_t cap) {
  throw Error(ErrorKind::EnumerationOverflow, std::string(what) + " enumeration exceeded cap " + std::to_string(cap));
}

void antichains_of_poset(const Poset& p, std::size_t start, ElemSet chosen, ElemSet candidates,
                         std::vector<ProductTerm>& out, std::size_t cap) {
  if (out.size() == cap) overflow("product", cap);
  out.push_back({chosen});
  candidates.for_each([&](std::size_t e) {
    if (e < start) return;
    ElemSet next = candidates - p.above(e) - p.below(e);
    ElemSet c = chosen;
    c.set(e);
    antichains_of_poset(p, e + 1, c, next, out, cap);
  });
}

// Antichains of an abstract order given incomparability rows; emits index lists.
void antichains_of_rows(const std::vector<Bits>& incomparable, std::size_t start, std::vector<std::size_t>& chosen,
                        const Bits& candidates, const std::function<void(const std::vector<std::size_t>&)>& emit) {
  candidates.for_each([&](std::size_t e) {
    if (e < start) return;
    chosen.push_back(e);
    emit(chosen);
    antichains_of_rows(incomparable, e + 1, chosen, candidates & incomparable[e], emit);
    chosen.pop_back();
  });
}

std::vector<LatticeElem> joins_of(const Poset& p, const std::vector<ProductTerm>& terms, std::size_t cap) {
  const std::size_t m = terms.size();
  std::vector<Bits> incomparable(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!pi_leq(p, terms[i], terms[j]) && !pi_leq(p, terms[j], terms[i])) incomparable[i].set(j);
  std::vector<LatticeElem> out;
  std::vector<std::size_t> chosen;
  antichains_of_rows(incomparable, 0, chosen, Bits(m, true), [&](const std::vector<std::size_t>& idx) {
    if (out.size() == cap) overflow("lattice", cap);
    LatticeElem le;
    for (auto i : idx) le.terms.push_back(terms[i]);
    std::sort(le.terms.begin(), le.terms.end());
    out.push_back(std::move(le));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ProductTerm> enumerate_pi(const Poset& p, Strictness s, std::size_t cap) {
  std::vector<ProductTerm> out;
  antichains_of_poset(p, 0, ElemSet{}, p.all(), out, cap == std::numeric_limits<std::size_t>::max() ? cap : cap + 1);
  if (s == Strictness::Strict) out.erase(out.begin());  // the empty antichain comes first
  if (out.size() > cap) overflow("product", cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeElem> enumerate_l(const Poset& p, Strictness s, std::size_t cap) {
  return joins_of(p, enumerate_pi(p, s, cap), cap);
}

std::vector<LatticeElem> stratum(const Poset& p, std::size_t n, Strictness s, std::size_t cap) {
  std::vector<ProductTerm> small;
  for (auto& t : enumerate_pi(p, s, cap))
    if (t.sigma.count() <= n) small.push_back(t);
  return joins_of(p, small, cap);
}

std::vector<AlgebraElem> lattice_closure(const std::vector<AlgebraElem>& gens, std::size_t cap) {
  std::map<Bits, AlgebraElem> members;
  std::vector<AlgebraElem> all, frontier;
  auto add = [&](const AlgebraElem& e, std::vector<AlgebraElem>& into) {
    if (members.try_emplace(canonical_table(e), e).second) {
      if (members.size() > cap)
        throw Error(ErrorKind::ClosureOverflow, "lattice closure exceeded cap " + std::to_string(cap));
      into.push_back(e);
    }
  };
  for (const auto& g : gens) add(g, frontier);
  all = frontier;
  while (!frontier.empty()) {
    std::vector<AlgebraElem> next;
    for (const auto& f : frontier)
      for (std::size_t i = 0; i < all.size(); ++i) {
        add(meet(f, all[i]), next);
        add(join(f, all[i]), next);
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<AlgebraElem> out;
  for (auto& [key, e] : members) out.push_back(e);
  return out;
}

IsoReport is_iso_IS_to_Pi(const Poset& p) {
  IsoReport report;
  auto segments = initial_segments(p);
  auto products = enumerate_pi(p, Strictness::Inclusive);
  report.initial_segments = segments.size();
  report.products = products.size();
  std::vector<ProductTerm> image;
  for (const auto& seg : segments) image.push_back({p.minimals(p.all() - seg)});

  std::vector<ProductTerm> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  if (std::adjacent_find(sorted_image.begin(), sorted_image.end()) != sorted_image.end()) {
    report.counterexample = "map is not injective";
    return report;
  }
  if (sorted_image != products) {
    report.counterexample = "map is not onto Pi(P)";
    return report;
  }
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = 0; j < segments.size(); ++j) {
      bool inclusion = segments[i].subset_of(segments[j]);
      if (inclusion != pi_leq(p, image[i], image[j])) {
        auto names = [&](const ElemSet& s) {
          std::string out = "{";
          for (const auto& n : p.names_of(s)) out += (out.size() > 1 ? "," : "") + n;
          return out + "}";
        };
        report.counterexample = "order mismatch between " + names(segments[i]) + " and " + names(segments[j]);
        return report;
      }
    }
  report.isomorphic = true;
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct HopcroftKarp {
  explicit HopcroftKarp(const std::vector<std::vector<std::size_t>>& adj)
      : adj(adj), n(adj.size()), match_left(n, kNone), match_right(n, kNone), dist(n) {}

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (match_left[u] == kNone) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kNone;
      }
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        std::size_t w = match_right[v];
        if (w == kNone) {
          found = true;
        } else if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj[u]) {
      std::size_t w = match_right[v];
      if (w == kNone || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kNone;
    return false;
  }

  std::size_t run() {
    std::size_t matching = 0;
    while (bfs())
      for (std::size_t u = 0; u < n; ++u)
        if (match_left[u] == kNone && dfs(u)) ++matching;
    return matching;
  }

  const std::vector<std::vector<std::size_t>>& adj;
  std::size_t n;
  std::vector<std::size_t> match_left, match_right, dist;
};

}  // namespace

AntichainResult max_antichain(std::size_t n, const OrderFn& leq, std::size_t exact_limit) {
  AntichainResult result;
  if (n == 0) return result;
  if (n > exact_limit) {
    result.exact = false;
    std::vector<std::size_t> comparable_count(n, 0), order(n);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = i;
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && (leq(i, j) || leq(j, i))) ++comparable_count[i];
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return comparable_count[a] < comparable_count[b]; });
    for (std::size_t i : order) {
      bool ok = std::none_of(result.members.begin(), result.members.end(),
                             [&](std::size_t j) { return leq(i, j) || leq(j, i); });
      if (ok) result.members.push_back(i);
    }
    std::sort(result.members.begin(), result.members.end());
    return result;
  }
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(i, j)) adj[i].push_back(j);
  HopcroftKarp hk(adj);
  hk.run();
  // Konig: Z = vertices reachable from free left vertices by alternating paths.
  std::vector<bool> z_left(n, false), z_right(n, false);
  std::queue<std::size_t> q;
  for (std::size_t u = 0; u < n; ++u)
    if (hk.match_left[u] == HopcroftKarp::kNone) {
      z_left[u] = true;
      q.push(u);
    }
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v : adj[u]) {
      if (z_right[v] || hk.match_left[u] == v) continue;
      z_right[v] = true;
      std::size_t w = hk.match_right[v];
      if (w != HopcroftKarp::kNone && !z_left[w]) {
        z_left[w] = true;
        q.push(w);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (z_left[x] && !z_right[x]) result.members.push_back(x);
  return result;
}

std::vector<std::size_t> longest_descending_chain(std::size_t n, const OrderFn& leq) {
  if (n == 0) return {};
  // Longest path in the DAG of the strict order; process by number of strict
  // predecessors so every predecessor is finished first.
  std::vector<std::size_t> below_count(n, 0), order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(j, i)) ++below_count[i];
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below_count[a] < below_count[b]; });
  std::vector<std::size_t> length(n, 1), prev(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = order[k];
    for (std::size_t l = 0; l < k; ++l) {
      std::size_t j = order[l];
      if (leq(j, i) && length[j] + 1 > length[i]) {
        length[i] = length[j] + 1;
        prev[i] = j;
      }
    }
  }
  std::size_t top = static_cast<std::size_t>(std::max_element(length.begin(), length.end()) - length.begin());
  std::vector<std::size_t> chain;
  for (std::size_t cur = top; cur != n; cur = prev[cur]) chain.push_back(cur);
  return chain;
}

}  // namespace pal
