#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pal/algebra.hpp"
#include "pal/bits.hpp"
#include "pal/poset.hpp"

namespace pal {

/// A set of points of a StoneSpace.
using Clopen = Bits;

/// The final segments of a finite poset: the points of the Stone space of
/// F(P). Everything here is evaluated by brute force over the points and is
/// used as the reference semantics for the symbolic modules.
class StoneSpace {
 public:
  explicit StoneSpace(PosetPtr p, std::size_t cap = kDefaultEnumerationCap);

  const PosetPtr& poset() const { return poset_; }
  const std::vector<ElemSet>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::optional<std::size_t> index_of(const ElemSet& segment) const;

  Clopen empty() const { return Clopen(size()); }
  Clopen full() const { return Clopen(size(), true); }

 private:
  PosetPtr poset_;
  std::vector<ElemSet> points_;
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> index_;
};

/// V_p = {R : p in R}
Clopen v_set(const StoneSpace& space, std::size_t p);
/// Set-theoretic interpretation of a term: generators as V_p, operators as
/// intersection, union and complement.
Clopen denote(const StoneSpace& space, const Expr& e);
/// Pointwise evaluation of an algebra element at every final segment.
Clopen denote(const StoneSpace& space, const AlgebraElem& e);

/// The element of F(P) whose denotation is `c` (support: all of P).
AlgebraElem element_of(const StoneSpace& space, const Clopen& c);
/// The element with denotation given by the low bits of `mask`
/// (requires space.size() <= 63).
AlgebraElem element_of_mask(const StoneSpace& space, std::uint64_t mask);

/// Least family containing `gens`, the empty set and the whole space that is
/// closed under intersection, union and complement. Plain fixpoint iteration;
/// throws ClosureOverflow past `cap` members. Result sorted.
std::vector<Clopen> subalgebra_closure(const StoneSpace& space, const std::vector<Clopen>& gens,
                                       std::size_t cap = 1u << 14);

/// Atoms of the generated subalgebra: the classes of points that no
/// generator separates.
std::vector<Clopen> generated_atoms(const StoneSpace& space, const std::vector<Clopen>& gens);
/// The generated subalgebra has 2^(this) members.
std::size_t generated_atom_count(const StoneSpace& space, const std::vector<Clopen>& gens);
/// True iff `gens` generates the full clopen algebra (separates all points).
bool generates(const StoneSpace& space, const std::vector<Clopen>& gens);

struct SubbaseOptions {
  /// Scan every subfamily while |P| is at most this; sample otherwise.
  std::size_t exhaustive_max = 5;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

struct SubbaseReport {
  bool holds = true;
  std::size_t subfamilies_checked = 0;
  bool exhaustive = true;
  /// Members of a violating subfamily, written V_p or -V_p.
  std::vector<std::string> witness;
};

/// Checks that {V_p} ∪ {-V_p} is a binary family: every subfamily with empty
/// intersection has two members with empty intersection.
SubbaseReport check_binary_subbase(const PosetPtr& p, const SubbaseOptions& options = {});

struct IntervalAlgebraReport {
  bool isomorphic = false;
  std::size_t interval_atoms = 0;  // atoms of B(L)
  std::size_t poset_atoms = 0;     // atoms of F(L minus its minimum)
};

/// Compares the interval algebra of a finite chain L (generated by the rays
/// [a,->)) with F(L \ {min L}), sending x_a to the complement of [a,->).
/// Requires a nonempty chain.
IntervalAlgebraReport interval_algebra_check(const Poset& chain);

}  // namespace pal
