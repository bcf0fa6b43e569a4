#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pal/algebra.hpp"
#include "pal/lattice.hpp"
#include "pal/poset.hpp"
#include "pal/stone.hpp"

namespace pal {

/// Boolean homomorphism F(P) -> F(T) determined by the images of the
/// generators of F(P).
class Hom {
 public:
  Hom(PosetPtr source, PosetPtr target, std::vector<AlgebraElem> gen_image);

  const PosetPtr& source() const { return source_; }
  const PosetPtr& target() const { return target_; }
  const std::vector<AlgebraElem>& gen_image() const { return gen_image_; }

  /// Evaluates the DNF of `e` with the target's operations.
  AlgebraElem apply(const AlgebraElem& e) const;
  /// Second route: the join of the images of the atoms of F(P) below `e`,
  /// one per final segment R, imaged as prod_{p in R} f(p) · prod_{p not in R} -f(p).
  AlgebraElem apply_by_atoms(const AlgebraElem& e) const;

 private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<AlgebraElem> gen_image_;
};

/// Extension of an order-preserving f: P -> F(target). Throws
/// NotOrderPreserving naming a pair p <= q with f(p) not below f(q).
Hom extend_hom(const PosetPtr& p, const PosetPtr& target, std::vector<AlgebraElem> f);

struct HomLawReport {
  bool ok = true;
  bool exhaustive = true;
  std::size_t elements_checked = 0;
  std::string failure;
};

/// Verifies the homomorphism equations of `h` and h(x_p) = f(p). Every
/// element of F(P) is imaged (when |FS(P)| <= 16) and checked against the
/// join of its atoms' images, with atom images pairwise disjoint and covering;
/// when F(P) has at most `pairwise_limit` elements the meet, join and
/// complement equations are also checked on every pair. When
/// `check_unique` is set, apply and apply_by_atoms must agree everywhere.
HomLawReport check_hom_laws(const Hom& h, bool check_unique = true, std::size_t pairwise_limit = 64,
                            std::uint64_t seed = 0);

/// Embedding F(Q) -> F(P) induced by an order embedding `inclusion` of Q into P.
/// Throws NotAnEmbedding.
Hom subposet_embedding(const PosetPtr& q, const PosetPtr& p, const std::vector<std::size_t>& inclusion);

/// The subposet of P on `ids`, in ascending id order.
PosetPtr induced_subposet(const Poset& p, const ElemSet& ids, std::string name);

struct InjectivityReport {
  bool injective = false;
  bool lattice_into_lattice = false;  // h[L(Q)] ⊆ L(P)
};

InjectivityReport check_embedding(const Hom& h);

struct RelativizeReport {
  PosetPtr q;                          // {p : p not >= q}
  std::vector<std::size_t> inclusion;  // Q -> P
  std::size_t source_atoms = 0;        // |FS(Q)|
  std::size_t target_atoms = 0;        // |V_q|
  bool unit_ok = false;                // image of 1 is x_q
  bool homomorphism = false;
  bool bijective = false;
};

/// y -> y · x_q from F(Q) onto F(P) restricted to x_q.
RelativizeReport relativize(const PosetPtr& p, std::size_t q);

struct ChainEpiReport {
  std::optional<Hom> hom;
  bool surjective = false;
  bool lattice_image_ok = false;  // h[L(P)] = L(C)
  bool chain_lattice_ok = false;  // L(C) = {x_c} (∪ {1} when inclusive)
};

/// x_p -> x_{position(p)} into F(C) for a linear augmentation C of P.
ChainEpiReport chain_epimorphism(const PosetPtr& p, const LinearAugmentation& aug,
                                 Strictness strictness = Strictness::Inclusive);

/// E : L(P) x L(Q) -> L(P x Q), E(a, b) = g_a^(b) where
/// f_q(p) = x_(p,q) and g_a(q) = f_q^(a).
class EMap {
 public:
  EMap(PosetPtr p, PosetPtr q);

  const PosetPtr& left() const { return p_; }
  const PosetPtr& right() const { return q_; }
  const PosetPtr& product() const { return pq_; }

  AlgebraElem operator()(const AlgebraElem& a, const AlgebraElem& b) const;
  AlgebraElem operator()(const LatticeElem& a, const LatticeElem& b) const;

  /// f_q^ : F(P) -> F(P x Q)
  const Hom& f_hat(std::size_t q) const { return f_hat_[q]; }
  Hom g_hat(const AlgebraElem& a) const;

 private:
  PosetPtr p_, q_, pq_;
  std::vector<Hom> f_hat_;
};

struct EMapReport {
  bool generator_equation = true;  // E(x_p, x_q) = x_(p,q)
  bool right_extends = true;       // b -> E(a, b) extends to a homomorphism
  bool left_extends = true;        // a -> E(a, x_q) extends to a homomorphism
  bool monotone = true;            // a -> E(a, b) order-preserving
  bool lands_in_lattice = true;    // E(a, b) in L(P x Q)
  std::size_t pairs_checked = 0;
  std::string failure;
  bool ok() const { return generator_equation && right_extends && left_extends && monotone && lands_in_lattice; }
};

EMapReport verify_e_map(const PosetPtr& p, const PosetPtr& q, Strictness strictness = Strictness::Inclusive);

/// Whether E[A x B] generates F(P x Q). Throws PremiseFailed unless A
/// generates F(P) and B generates F(Q).
bool product_generation_check(const PosetPtr& p, const PosetPtr& q, const std::vector<LatticeElem>& a,
                              const std::vector<LatticeElem>& b);

struct LayeringReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::string counterexample;
};

/// Inside F(lex_sum(Q, parts)): for x < y in Q, every g in L(P_x) lies
/// strictly below every h in L(P_y) (strict lattices: no 0, no 1).
LayeringReport lex_layering_check(const PosetPtr& index, const std::vector<PosetPtr>& parts);

struct HConstruction {
  std::vector<std::vector<AlgebraElem>> layers;  // H_0, ..., H_k
  std::vector<AlgebraElem> h;                    // {0} ∪ all layers
  bool generates = false;
  bool layering = false;
  /// y · (x_p(n) - x_p(n-1)) = f(y) - x_p(n-1) for y in G_n, and g[G_n]
  /// generates F(P) restricted to x_p(n) - x_p(n-1).
  bool steps_ok = false;
};

/// Builds H from a strictly increasing cofinal chain p(0) < ... < p(k) of a
/// directed P, with G_n = Pi(P_n), P_n = {x : x not >= p(n)}. Throws
/// NotCofinal (checked first), NotDirected, PremiseFailed (chain not strictly increasing).
HConstruction h_construction(const PosetPtr& p, const std::vector<std::size_t>& chain);

/// Saturated chains from a minimal element to `top`.
std::vector<std::vector<std::size_t>> maximal_chains_to(const Poset& p, std::size_t top);
/// The greatest element, if P has one.
std::optional<std::size_t> top_element(const Poset& p);
bool is_directed(const Poset& p);

}  // namespace pal
