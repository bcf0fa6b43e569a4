#include "pal/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "pal/algebra.hpp"
#include "pal/corpus.hpp"
#include "pal/error.hpp"
#include "pal/morphisms.hpp"
#include "pal/stone.hpp"
#include "pal/wqo.hpp"

namespace pal::suites {

namespace {

using Json = io::Json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  Json witness;
  Json info = Json::object();

  void fail(Json w) {
    if (ok) witness = std::move(w);
    ok = false;
  }
};

/// Runs one case, turning library errors into failures with their witness.
template <typename Body>
void run_case(SuiteReport& r, const Poset* replay, const std::string& poset, Json params, Body&& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const Error& e) {
    o.fail({{"error", to_string(e.kind())}, {"message", e.what()}, {"witness", e.witness()}});
  }
  Json rec{{"suite", r.suite}, {"poset", poset}, {"params", std::move(params)}, {"verdict", o.ok ? "pass" : "fail"}};
  if (!o.info.empty()) rec["info"] = std::move(o.info);
  if (!o.ok) {
    rec["witness"] = std::move(o.witness);
    if (replay) rec["posetSpec"] = io::poset_to_json(*replay);
  }
  rec["elapsed_ms"] = ms_since(t0);
  ++r.cases;
  if (!o.ok) {
    ++r.failures;
    if (r.first_failure.is_null()) r.first_failure = rec;
  }
  r.records.push_back(std::move(rec));
}

Json names(const Poset& p, const ElemSet& s) { return p.names_of(s); }

/// Subsets of {0..n-1} with at most k members, as ElemSets.
std::vector<ElemSet> small_subsets(std::size_t n, std::size_t k) {
  std::vector<ElemSet> out;
  for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) > k) continue;
    ElemSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1ULL) s.set(i);
    out.push_back(s);
  }
  return out;
}

ElemSet random_subset(std::size_t n, std::size_t max_k, std::mt19937_64& rng) {
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::uniform_int_distribution<std::size_t> size(0, std::min(max_k, n));
  ElemSet s;
  const std::size_t k = size(rng);
  for (std::size_t i = 0; i < k; ++i) s.set(ids[i]);
  return s;
}

/// Oracle denotation of (prod_{p in pos} V_p) ∩ (prod_{q in neg} -V_q).
struct Generators {
  const StoneSpace& space;
  std::vector<Clopen> v;

  explicit Generators(const StoneSpace& s) : space(s) {
    for (std::size_t p = 0; p < s.poset()->size(); ++p) v.push_back(v_set(s, p));
  }
  Clopen product(const ElemSet& pos, const ElemSet& neg = {}) const {
    Clopen c = space.full();
    pos.for_each([&](std::size_t p) { c &= v[p]; });
    neg.for_each([&](std::size_t q) { c = c - v[q]; });
    return c;
  }
  Clopen lattice(const LatticeElem& a) const {
    Clopen c = space.empty();
    for (const auto& t : a.terms) c |= product(t.sigma);
    return c;
  }
};

std::size_t samples_or(const SuiteConfig& c, std::size_t fallback) { return c.samples.value_or(fallback); }

PosetPtr random_corpus_poset(const SuiteConfig& c, std::size_t index, std::uint64_t salt) {
  std::mt19937_64 rng(c.seed ^ (salt * 0x9e3779b97f4a7c15ULL) ^ index);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  auto p = posets::random_poset(c.random_size, density(rng), rng());
  return p;
}

// ---------------------------------------------------------------------------

void suite_fact24(const SuiteConfig& c, SuiteReport& r) {
  auto check = [](const PosetPtr& p, const Generators& g, const ElemSet& s, const ElemSet& t, Outcome& o) {
    const bool oracle = g.product(s, t).none();
    const bool syntactic = is_zero_syntactic(*p, s, t);
    const bool symbolic = is_zero(elementary_product(p, s, t));
    if (oracle != syntactic || oracle != symbolic)
      o.fail({{"sigma", names(*p, s)},
              {"tau", names(*p, t)},
              {"oracleZero", oracle},
              {"syntacticZero", syntactic},
              {"algebraZero", symbolic}});
  };
  for (const auto& p : corpus::up_to(c.max_size)) {
    run_case(r, p.get(), p->name(), {{"maxSubset", 3}}, [&](Outcome& o) {
      StoneSpace space(p);
      Generators g(space);
      auto subsets = small_subsets(p->size(), 3);
      for (const auto& s : subsets)
        for (const auto& t : subsets) check(p, g, s, t, o);
      o.info["pairs"] = subsets.size() * subsets.size();
    });
  }
  const std::size_t n = samples_or(c, 1000);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = random_corpus_poset(c, i, 1);
    run_case(r, p.get(), p->name(), {{"seed", c.seed}, {"index", i}}, [&](Outcome& o) {
      std::mt19937_64 rng(c.seed + i);
      StoneSpace space(p);
      Generators g(space);
      check(p, g, random_subset(p->size(), 3, rng), random_subset(p->size(), 3, rng), o);
    });
  }
}

void suite_pi_order(const SuiteConfig& c, SuiteReport& r) {
  auto check = [](const PosetPtr& p, const Generators& g, const ElemSet& s, const ElemSet& t, Outcome& o) {
    bool forall_exists = true;
    t.for_each([&](std::size_t q) {
      bool found = false;
      s.for_each([&](std::size_t a) { found = found || p->leq(a, q); });
      forall_exists = forall_exists && found;
    });
    const bool upsets = p->upset(t).subset_of(p->upset(s));
    const bool oracle_le = g.product(s).subset_of(g.product(t));
    const bool lattice = pi_leq(*p, product_term(*p, s), product_term(*p, t));
    if (forall_exists != upsets || forall_exists != oracle_le || forall_exists != lattice)
      o.fail({{"sigma", names(*p, s)},
              {"tau", names(*p, t)},
              {"forallExists", forall_exists},
              {"upsetInclusion", upsets},
              {"denotationInclusion", oracle_le},
              {"piLeq", lattice}});
  };
  for (const auto& p : corpus::up_to(c.max_size)) {
    run_case(r, p.get(), p->name(), {{"maxSubset", 3}}, [&](Outcome& o) {
      StoneSpace space(p);
      Generators g(space);
      auto subsets = small_subsets(p->size(), 3);
      for (const auto& s : subsets)
        for (const auto& t : subsets) check(p, g, s, t, o);
      o.info["pairs"] = subsets.size() * subsets.size();
    });
  }
  const std::size_t n = samples_or(c, 1000);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = random_corpus_poset(c, i, 2);
    run_case(r, p.get(), p->name(), {{"seed", c.seed}, {"index", i}}, [&](Outcome& o) {
      std::mt19937_64 rng(c.seed + i);
      StoneSpace space(p);
      Generators g(space);
      check(p, g, random_subset(p->size(), 3, rng), random_subset(p->size(), 3, rng), o);
    });
  }
}

void suite_join_prime(const SuiteConfig& c, SuiteReport& r) {
  for (const auto& p : corpus::up_to(c.max_size)) {
    run_case(r, p.get(), p->name(), {{"strict", c.strictness == Strictness::Strict}}, [&](Outcome& o) {
      StoneSpace space(p);
      Generators g(space);
      auto subsets = small_subsets(p->size(), p->size());
      std::vector<Clopen> prod;
      for (const auto& s : subsets) prod.push_back(g.product(s));
      for (std::size_t s = 0; s < subsets.size() && o.ok; ++s)
        for (std::size_t t1 = 0; t1 < subsets.size() && o.ok; ++t1) {
          if (prod[s].subset_of(prod[t1])) continue;
          for (std::size_t t2 = 0; t2 < subsets.size(); ++t2)
            if (prod[s].subset_of(prod[t1] | prod[t2]) && !prod[s].subset_of(prod[t2])) {
              o.fail({{"sigma", names(*p, subsets[s])}, {"tau1", names(*p, subsets[t1])}, {"tau2", names(*p, subsets[t2])}});
              break;
            }
        }
      auto all = enumerate_l(*p, c.strictness);
      std::vector<Clopen> den;
      for (const auto& a : all) den.push_back(g.lattice(a));
      for (std::size_t i = 0; i < all.size() && o.ok; ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
          if (l_leq(*p, all[i], all[j]) != den[i].subset_of(den[j])) {
            o.fail({{"a", format_lattice(*p, all[i])},
                    {"b", format_lattice(*p, all[j])},
                    {"lLeq", l_leq(*p, all[i], all[j])}});
            break;
          }
      o.info["latticeSize"] = all.size();
    });
  }
}

void suite_is_pi_iso(const SuiteConfig& c, SuiteReport& r) {
  auto run = [&](const PosetPtr& p) {
    run_case(r, p.get(), p->name(), Json::object(), [&](Outcome& o) {
      auto rep = is_iso_IS_to_Pi(*p);
      o.info["initialSegments"] = rep.initial_segments;
      o.info["products"] = rep.products;
      if (!rep.isomorphic) o.fail({{"counterexample", rep.counterexample}});
    });
  };
  for (const auto& p : corpus::up_to(c.max_size)) run(p);
  for (std::size_t n = 3; n <= 5; ++n) run(posets::rado_prefix(n));
}

void suite_chain_lattice(const SuiteConfig& c, SuiteReport& r) {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto p = posets::chain(n);
    run_case(r, p.get(), p->name(), {{"n", n}}, [&](Outcome& o) {
      std::vector<AlgebraElem> gens;
      for (std::size_t i = 0; i < n; ++i) gens.push_back(AlgebraElem::gen(p, i));
      auto closure = lattice_closure(gens);
      bool same = closure.size() == gens.size();
      for (const auto& e : closure)
        same = same && std::any_of(gens.begin(), gens.end(), [&](const AlgebraElem& g) { return equals(g, e); });
      auto strict = enumerate_l(*p, Strictness::Strict);
      if (!same) o.fail({{"closureSize", closure.size()}, {"generators", n}});
      else if (strict.size() != n) o.fail({{"strictLatticeSize", strict.size()}, {"generators", n}});
    });
  }
  std::size_t index = 0;
  for (const auto& p : corpus::up_to(c.max_size)) {
    const std::uint64_t seed = c.seed + index++;
    run_case(r, p.get(), p->name(), {{"seed", seed}}, [&](Outcome& o) {
      auto aug = linear_augmentation(*p, seed);
      auto rep = chain_epimorphism(p, aug, c.strictness);
      if (!rep.surjective || !rep.lattice_image_ok || !rep.chain_lattice_ok) {
        std::vector<std::string> order;
        for (auto e : aug.order) order.push_back(p->element_name(e));
        o.fail({{"augmentation", order},
                {"surjective", rep.surjective},
                {"latticeImage", rep.lattice_image_ok},
                {"chainLattice", rep.chain_lattice_ok}});
      }
    });
  }
}

void suite_rado(const SuiteConfig& c, SuiteReport& r) {
  std::size_t last = 0;
  std::size_t largest = 0;
  bool monotone = true;
  for (std::size_t n = 4; n <= 6; ++n) {
    auto p = posets::rado_prefix(n);
    run_case(r, p.get(), p->name(), {{"N", n}}, [&](Outcome& o) {
      auto pi = enumerate_pi(*p);
      std::vector<ElemSet> up;
      for (const auto& t : pi) up.push_back(p->upset(t.sigma));
      // x_s <= x_t iff t ⊆ upset(s)
      auto res = max_antichain(
          pi.size(), [&](std::size_t a, std::size_t b) { return pi[b].sigma.subset_of(up[a]); }, 2000);
      std::vector<std::string> witness;
      for (auto i : res.members) witness.push_back(format_term(*p, pi[i]));
      o.info["piSize"] = pi.size();
      o.info["antichainSize"] = res.members.size();
      o.info["exact"] = res.exact;
      o.info["antichain"] = witness;
      if (res.members.size() < n - 1) o.fail({{"antichainSize", res.members.size()}, {"required", n - 1}});
      if (res.members.size() < last) monotone = false;
      last = res.members.size();
      largest = std::max(largest, res.members.size());
    });
  }
  bool bad_all = true;
  for (std::size_t n = 3; n <= c.horizon; ++n) {
    auto p = posets::rado_prefix(n);
    run_case(r, p.get(), p->name(), {{"k", 2}, {"N", n}, {"labeling", "rado-identity"}}, [&](Outcome& o) {
      auto cls = classify_array(*p, rado_identity_labeling(*p, n));
      o.info["verdict"] = to_string(cls.verdict);
      o.info["badPairs"] = cls.bad_pairs;
      o.info["goodPairs"] = cls.good_pairs;
      if (cls.verdict != ArrayVerdict::Bad || cls.good_pairs != 0) {
        bad_all = false;
        Json w{{"verdict", to_string(cls.verdict)}, {"goodPairs", cls.good_pairs}};
        if (cls.good_witness) w["goodPair"] = {cls.good_witness->first, cls.good_witness->second};
        o.fail(std::move(w));
      }
    });
  }
  r.extra["badArray"] = bad_all;
  r.extra["antichainSize"] = largest;
  r.extra["antichainMonotone"] = monotone;
}

std::vector<PosetPtr> small_family() {
  return {posets::chain(1), posets::chain(2), posets::antichain(2), posets::v3()};
}

void suite_emap(const SuiteConfig& c, SuiteReport& r) {
  for (const auto& p : small_family())
    for (const auto& q : small_family()) {
      run_case(r, nullptr, p->name() + " x " + q->name(), {{"left", p->name()}, {"right", q->name()}}, [&](Outcome& o) {
        auto rep = verify_e_map(p, q, c.strictness);
        o.info["pairs"] = rep.pairs_checked;
        if (!rep.ok())
          o.fail({{"generatorEquation", rep.generator_equation},
                  {"rightExtends", rep.right_extends},
                  {"leftExtends", rep.left_extends},
                  {"monotone", rep.monotone},
                  {"landsInLattice", rep.lands_in_lattice},
                  {"failure", rep.failure}});
      });
    }
}

void suite_product_gen(const SuiteConfig&, SuiteReport& r) {
  auto as_lattice = [](const Poset& p) {
    std::vector<LatticeElem> out;
    for (const auto& t : enumerate_pi(p)) out.push_back(LatticeElem{{t}});
    return out;
  };
  for (const auto& p : small_family())
    for (const auto& q : small_family()) {
      run_case(r, nullptr, p->name() + " x " + q->name(), {{"left", p->name()}, {"right", q->name()}}, [&](Outcome& o) {
        if (!product_generation_check(p, q, as_lattice(*p), as_lattice(*q))) o.fail({{"generates", false}});
      });
    }
}

void suite_relativize(const SuiteConfig& c, SuiteReport& r) {
  for (const auto& p : corpus::up_to(c.max_size))
    for (std::size_t q = 0; q < p->size(); ++q) {
      run_case(r, p.get(), p->name(), {{"q", p->element_name(q)}}, [&](Outcome& o) {
        auto rep = relativize(p, q);
        o.info["sourceAtoms"] = rep.source_atoms;
        o.info["targetAtoms"] = rep.target_atoms;
        if (!rep.bijective || !rep.homomorphism || !rep.unit_ok)
          o.fail({{"bijective", rep.bijective}, {"homomorphism", rep.homomorphism}, {"unit", rep.unit_ok}});
      });
    }
}

void suite_hom_laws(const SuiteConfig& c, SuiteReport& r) {
  const auto sources = corpus::up_to(4);
  const auto targets = corpus::up_to(3);
  const std::size_t n = samples_or(c, 200);
  for (std::size_t i = 0; i < n; ++i) {
    std::mt19937_64 rng(c.seed * 1000003ULL + i);
    const auto& p = sources[std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(rng)];
    const auto& t = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
    run_case(r, p.get(), p->name(), {{"target", t->name()}, {"seed", c.seed}, {"index", i}}, [&](Outcome& o) {
      // f(p) = join of random r(q) over q <= p is order-preserving.
      StoneSpace ts(t);
      std::bernoulli_distribution coin(0.5);
      std::vector<AlgebraElem> raw;
      for (std::size_t e = 0; e < p->size(); ++e) {
        Clopen cl = ts.empty();
        for (std::size_t k = 0; k < ts.size(); ++k)
          if (coin(rng)) cl.set(k);
        raw.push_back(element_of(ts, cl));
      }
      std::vector<AlgebraElem> f;
      for (std::size_t e = 0; e < p->size(); ++e) {
        AlgebraElem acc = AlgebraElem::zero(t);
        p->below(e).for_each([&](std::size_t b) { acc = join(acc, raw[b]); });
        f.push_back(acc);
      }
      Hom h = extend_hom(p, t, f);
      auto rep = check_hom_laws(h, true, 64, c.seed + i);
      o.info["elementsChecked"] = rep.elements_checked;
      o.info["exhaustive"] = rep.exhaustive;
      if (!rep.ok) {
        Json images = Json::array();
        for (const auto& g : f) images.push_back(format_dnf(*t, to_dnf(g)));
        o.fail({{"failure", rep.failure}, {"targetSpec", io::poset_to_json(*t)}, {"images", images}});
      }
    });
  }
}

void suite_h_construction(const SuiteConfig& c, SuiteReport& r) {
  auto run = [&](const PosetPtr& p, const std::vector<std::size_t>& chain) {
    std::vector<std::string> chain_names;
    for (auto e : chain) chain_names.push_back(p->element_name(e));
    run_case(r, p.get(), p->name(), {{"chain", chain_names}}, [&](Outcome& o) {
      auto h = h_construction(p, chain);
      o.info["hSize"] = h.h.size();
      if (!h.generates || !h.layering || !h.steps_ok)
        o.fail({{"generates", h.generates}, {"layering", h.layering}, {"steps", h.steps_ok}});
    });
  };
  for (const auto& p : corpus::up_to(c.max_size + 1)) {
    auto top = top_element(*p);
    if (!top) continue;
    for (const auto& chain : maximal_chains_to(*p, *top)) run(p, chain);
  }
  for (std::size_t n = 1; n <= c.max_size + 1; ++n) {
    auto p = posets::chain(n);
    std::vector<std::size_t> chain(n);
    for (std::size_t i = 0; i < n; ++i) chain[i] = i;
    run(p, chain);
  }
}

void suite_binary_subbase(const SuiteConfig& c, SuiteReport& r) {
  SubbaseOptions opt;
  opt.exhaustive_max = c.max_size > 0 ? c.max_size - 1 : 0;
  opt.samples = samples_or(c, 10000);
  opt.seed = c.seed;
  for (const auto& p : corpus::up_to(c.max_size)) {
    run_case(r, p.get(), p->name(), {{"seed", c.seed}}, [&](Outcome& o) {
      auto rep = check_binary_subbase(p, opt);
      o.info["subfamilies"] = rep.subfamilies_checked;
      o.info["exhaustive"] = rep.exhaustive;
      if (!rep.holds) o.fail({{"subfamily", rep.witness}});
    });
  }
}

void suite_interval_algebra(const SuiteConfig&, SuiteReport& r) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto p = posets::chain(n);
    run_case(r, p.get(), p->name(), {{"n", n}}, [&](Outcome& o) {
      auto rep = interval_algebra_check(*p);
      o.info["intervalAtoms"] = rep.interval_atoms;
      o.info["posetAtoms"] = rep.poset_atoms;
      if (!rep.isomorphic) o.fail({{"intervalAtoms", rep.interval_atoms}, {"posetAtoms", rep.poset_atoms}});
    });
  }
}

void suite_lex_layering(const SuiteConfig& c, SuiteReport& r) {
  const auto indices = corpus::up_to(3);
  const std::size_t n = samples_or(c, 50);
  for (std::size_t i = 0; i < n; ++i) {
    std::mt19937_64 rng(c.seed * 7919ULL + i);
    const auto& q = indices[std::uniform_int_distribution<std::size_t>(0, indices.size() - 1)(rng)];
    std::vector<PosetPtr> parts;
    std::uniform_int_distribution<std::size_t> size(1, 3);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (std::size_t k = 0; k < q->size(); ++k) parts.push_back(posets::random_poset(size(rng), density(rng), rng()));
    Json part_specs = Json::array();
    for (const auto& part : parts) part_specs.push_back(io::poset_to_json(*part));
    run_case(r, q.get(), q->name(), {{"seed", c.seed}, {"index", i}, {"parts", part_specs}}, [&](Outcome& o) {
      auto rep = lex_layering_check(q, parts);
      o.info["pairs"] = rep.pairs_checked;
      if (!rep.holds) o.fail({{"counterexample", rep.counterexample}});
    });
  }
}

using SuiteFn = std::function<void(const SuiteConfig&, SuiteReport&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"fact24", suite_fact24},
      {"pi-order", suite_pi_order},
      {"join-prime", suite_join_prime},
      {"is-pi-iso", suite_is_pi_iso},
      {"chain-lattice", suite_chain_lattice},
      {"rado", suite_rado},
      {"emap", suite_emap},
      {"product-gen", suite_product_gen},
      {"relativize", suite_relativize},
      {"hom-laws", suite_hom_laws},
      {"h-construction", suite_h_construction},
      {"binary-subbase", suite_binary_subbase},
      {"interval-algebra", suite_interval_algebra},
      {"lex-layering", suite_lex_layering},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "fact24", "pi-order", "join-prime", "is-pi-iso", "chain-lattice", "rado", "emap",
      "product-gen", "relativize", "hom-laws", "h-construction", "binary-subbase", "interval-algebra",
      "lex-layering"};
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto t0 = Clock::now();
  SuiteReport report;
  report.suite = config.suite;
  if (config.suite == "all") {
    for (const auto& name : suite_names()) {
      SuiteConfig sub = config;
      sub.suite = name;
      auto child = run_suite(sub);
      report.cases += child.cases;
      report.failures += child.failures;
      if (report.first_failure.is_null() && !child.first_failure.is_null()) report.first_failure = child.first_failure;
      report.children.push_back(std::move(child));
    }
  } else {
    auto it = registry().find(config.suite);
    if (it == registry().end()) throw Error(ErrorKind::Parse, "unknown suite \"" + config.suite + "\"");
    it->second(config, report);
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

Json SuiteReport::to_json() const {
  Json j{{"suite", suite}, {"cases", cases}, {"failures", failures}, {"elapsed_ms", elapsed_ms}};
  for (const auto& [k, v] : extra.items()) j[k] = v;
  if (children.empty()) {
    j["records"] = records;
  } else {
    Json subs = Json::array();
    for (const auto& c : children) {
      Json s{{"suite", c.suite}, {"cases", c.cases}, {"failures", c.failures}, {"elapsed_ms", c.elapsed_ms}};
      for (const auto& [k, v] : c.extra.items()) s[k] = v;
      subs.push_back(std::move(s));
    }
    j["suites"] = std::move(subs);
  }
  j["firstFailure"] = first_failure;
  return j;
}

std::string SuiteReport::to_human() const {
  std::ostringstream out;
  auto line = [&](const SuiteReport& r) {
    out << (r.ok() ? "ok    " : "FAIL  ") << r.suite << ": " << r.cases << " cases, " << r.failures << " failures, "
        << static_cast<long long>(r.elapsed_ms) << " ms";
    for (const auto& [k, v] : r.extra.items()) out << ", " << k << "=" << v.dump();
    out << "\n";
  };
  for (const auto& c : children) line(c);
  line(*this);
  if (!first_failure.is_null()) out << "first failure:\n" << first_failure.dump(2) << "\n";
  return out.str();
}

}  // namespace pal::suites
