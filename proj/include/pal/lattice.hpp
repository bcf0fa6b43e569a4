#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pal/algebra.hpp"
#include "pal/poset.hpp"

namespace pal {

/// x_sigma = prod_{p in sigma} x_p, with sigma kept as an antichain
/// (its minimal elements). The empty product is 1.
struct ProductTerm {
  ElemSet sigma;
  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
  friend bool operator<(const ProductTerm& a, const ProductTerm& b) { return a.sigma < b.sigma; }
};

/// Finite join of product terms, kept with no term below another one.
/// No terms means 0.
struct LatticeElem {
  std::vector<ProductTerm> terms;  // sorted
  friend bool operator==(const LatticeElem&, const LatticeElem&) = default;
  friend bool operator<(const LatticeElem& a, const LatticeElem& b) { return a.terms < b.terms; }
};

/// Whether the representation-level constants belong to Pi(P) and L(P).
/// Inclusive: Pi(P) contains 1 (empty product), L(P) contains 1. Strict:
/// neither. The empty join 0 is never enumerated.
enum class Strictness { Inclusive, Strict };

ProductTerm product_term(const Poset& p, const ElemSet& sigma);
/// x_s <= x_t iff every q in t lies above some element of s.
bool pi_leq(const Poset& p, const ProductTerm& s, const ProductTerm& t);

LatticeElem l_elem(const Poset& p, std::vector<ProductTerm> terms);
LatticeElem l_join(const Poset& p, const LatticeElem& a, const LatticeElem& b);
LatticeElem l_meet(const Poset& p, const LatticeElem& a, const LatticeElem& b);
/// Every term of a lies below some term of b.
bool l_leq(const Poset& p, const LatticeElem& a, const LatticeElem& b);

AlgebraElem to_algebra(const PosetPtr& p, const ProductTerm& t);
AlgebraElem to_algebra(const PosetPtr& p, const LatticeElem& a);
/// The lattice element equal to `e`, if any (0 maps to the empty join).
/// Exists iff e is monotone in the final segment it is evaluated at.
std::optional<LatticeElem> to_lattice(const AlgebraElem& e);

/// `x{a} + x{b,c}`; 0 and 1 for the constants.
std::string format_lattice(const Poset& p, const LatticeElem& a);
std::string format_term(const Poset& p, const ProductTerm& t);

std::vector<ProductTerm> enumerate_pi(const Poset& p, Strictness s = Strictness::Inclusive,
                                      std::size_t cap = kDefaultEnumerationCap);
std::vector<LatticeElem> enumerate_l(const Poset& p, Strictness s = Strictness::Inclusive,
                                     std::size_t cap = kDefaultEnumerationCap);
/// Joins of products with |sigma| <= n.
std::vector<LatticeElem> stratum(const Poset& p, std::size_t n, Strictness s = Strictness::Inclusive,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Least set containing `gens` closed under meet and join. Sorted by
/// canonical table; throws ClosureOverflow past `cap`.
std::vector<AlgebraElem> lattice_closure(const std::vector<AlgebraElem>& gens, std::size_t cap = 1u << 14);

struct IsoReport {
  bool isomorphic = false;
  std::size_t initial_segments = 0;
  std::size_t products = 0;
  std::string counterexample;
};

/// Checks that I -> x_{min(P \ I)} is an order isomorphism from the initial
/// segments of P (under inclusion) onto Pi(P) (inclusive).
IsoReport is_iso_IS_to_Pi(const Poset& p);

// ---------------------------------------------------------------------------
// Antichain and chain miners over an abstract finite order.

using OrderFn = std::function<bool(std::size_t, std::size_t)>;

struct AntichainResult {
  std::vector<std::size_t> members;
  bool exact = true;
};

/// Largest antichain. Exact (Dilworth via Hopcroft-Karp matching and Konig's
/// theorem) up to `exact_limit` elements, greedy beyond.
AntichainResult max_antichain(std::size_t n, const OrderFn& leq, std::size_t exact_limit = 400);
/// A longest strictly descending chain, listed from the top.
std::vector<std::size_t> longest_descending_chain(std::size_t n, const OrderFn& leq);

}  // namespace pal
