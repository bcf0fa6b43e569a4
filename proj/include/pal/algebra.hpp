#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pal/bits.hpp"
#include "pal/poset.hpp"

namespace pal {

/// Largest support whose trace table we are willing to materialize.
inline constexpr std::size_t kMaxSupport = 20;

/// An element of the free Boolean algebra F(P).
///
/// The element is stored as a finite support S and a truth table over the
/// up-closed subsets of S. Those are exactly the traces R ∩ S of final
/// segments R of P, so two elements are equal iff their tables agree once
/// both are extended to a common support. The table is indexed by the bit
/// mask of the trace relative to the sorted support; entries at masks that
/// are not up-sets are always zero.
class AlgebraElem {
 public:
  static AlgebraElem gen(PosetPtr p, std::size_t elem);
  static AlgebraElem zero(PosetPtr p) { return constant(std::move(p), false); }
  static AlgebraElem one(PosetPtr p) { return constant(std::move(p), true); }
  static AlgebraElem constant(PosetPtr p, bool value);
  /// The atom of F(P) supported on all of P that is true exactly at the
  /// final segment `segment`.
  static AlgebraElem point(PosetPtr p, const ElemSet& segment);
  /// Builds from a predicate over traces (up-sets of `support`).
  template <typename Pred>
  static AlgebraElem tabulate(PosetPtr p, const ElemSet& support, Pred&& pred);

  const PosetPtr& poset() const { return poset_; }
  const ElemSet& support() const { return support_; }
  const Bits& table() const { return truth_; }

  /// Value at a final segment of P. Throws NotUpClosed.
  bool eval(const ElemSet& final_segment) const;
  /// Value at an up-closed subset of the support (no closure check).
  bool at_trace(const ElemSet& trace) const;

  /// Same element over a larger support.
  AlgebraElem extend_to(const ElemSet& support) const;

  /// Up-sets of the support, as global element sets.
  std::vector<ElemSet> traces() const;

 private:
  AlgebraElem(PosetPtr p, ElemSet support, Bits truth)
      : poset_(std::move(p)), support_(support), truth_(std::move(truth)) {}

  friend AlgebraElem complement(const AlgebraElem& e);
  friend AlgebraElem support_reduce(const AlgebraElem& e);
  friend AlgebraElem combine(const AlgebraElem& a, const AlgebraElem& b, int op);

  PosetPtr poset_;
  ElemSet support_;
  Bits truth_;
};

AlgebraElem meet(const AlgebraElem& a, const AlgebraElem& b);
AlgebraElem join(const AlgebraElem& a, const AlgebraElem& b);
AlgebraElem complement(const AlgebraElem& e);
/// a · -b
AlgebraElem difference(const AlgebraElem& a, const AlgebraElem& b);

inline AlgebraElem operator&(const AlgebraElem& a, const AlgebraElem& b) { return meet(a, b); }
inline AlgebraElem operator|(const AlgebraElem& a, const AlgebraElem& b) { return join(a, b); }
inline AlgebraElem operator!(const AlgebraElem& e) { return complement(e); }

bool is_zero(const AlgebraElem& e);
bool equals(const AlgebraElem& a, const AlgebraElem& b);
bool leq(const AlgebraElem& a, const AlgebraElem& b);

/// Drops support elements the table does not depend on, in ascending id
/// order until nothing more can go.
AlgebraElem support_reduce(const AlgebraElem& e);

/// Table over the full support of P; a canonical key when |P| <= kMaxSupport.
Bits canonical_table(const AlgebraElem& e);

/// (prod_{p in pos} x_p) · (prod_{q in neg} -x_q)
struct ElementaryProduct {
  ElemSet pos;
  ElemSet neg;
  friend bool operator==(const ElementaryProduct&, const ElementaryProduct&) = default;
};

AlgebraElem elementary_product(const PosetPtr& p, const ElemSet& pos, const ElemSet& neg);
AlgebraElem elementary_product(const PosetPtr& p, const ElementaryProduct& prod);
/// True iff some p in pos lies below some q in neg. Purely order-theoretic.
bool is_zero_syntactic(const Poset& p, const ElemSet& pos, const ElemSet& neg);

/// Disjoint DNF over the reduced support: one product per true trace, with
/// the positive part cut to its minimal elements and the negative part to
/// its maximal ones. Empty for zero.
std::vector<ElementaryProduct> to_dnf(const AlgebraElem& e);
AlgebraElem from_dnf(const PosetPtr& p, const std::vector<ElementaryProduct>& dnf);

std::string format_product(const Poset& p, const ElementaryProduct& prod);
std::string format_dnf(const Poset& p, const std::vector<ElementaryProduct>& dnf);

// ---------------------------------------------------------------------------
// Term expressions

/// Syntax tree over generators; the input language of the CLI and the object
/// the Stone-space oracle interprets independently of AlgebraElem.
struct Expr {
  enum class Kind { Zero, One, Gen, Not, And, Or };

  Kind kind = Kind::Zero;
  std::size_t gen = 0;
  std::vector<Expr> args;

  static Expr zero() { return {Kind::Zero, 0, {}}; }
  static Expr one() { return {Kind::One, 0, {}}; }
  static Expr var(std::size_t p) { return {Kind::Gen, p, {}}; }
  static Expr negate(Expr e) { return {Kind::Not, 0, {std::move(e)}}; }
  static Expr conj(Expr a, Expr b) { return {Kind::And, 0, {std::move(a), std::move(b)}}; }
  static Expr disj(Expr a, Expr b) { return {Kind::Or, 0, {std::move(a), std::move(b)}}; }
};

/// Grammar: atoms `x(name)`, `0`, `1`; `!` > `&` > `|`; parentheses.
/// Throws Error{Parse} or Error{UnknownElement}.
Expr parse_expr(const Poset& p, std::string_view text);
std::string format_expr(const Poset& p, const Expr& e);
AlgebraElem evaluate(const PosetPtr& p, const Expr& e);

/// Random expression tree of the given depth over all generators.
Expr random_expr(const Poset& p, std::size_t depth, std::mt19937_64& rng);

// ---------------------------------------------------------------------------

namespace detail {

/// Local view of a support: sorted ids and the up-sets as masks.
struct SupportFrame {
  std::vector<std::size_t> ids;
  std::vector<std::uint32_t> upsets;
  Bits upset_indicator;  // size 2^|ids|
};

std::shared_ptr<const SupportFrame> frame_for(const PosetPtr& p, const ElemSet& support);
std::uint32_t local_mask(const SupportFrame& f, const ElemSet& trace);
ElemSet global_set(const SupportFrame& f, std::uint32_t mask);

}  // namespace detail

template <typename Pred>
AlgebraElem AlgebraElem::tabulate(PosetPtr p, const ElemSet& support, Pred&& pred) {
  auto frame = detail::frame_for(p, support);
  Bits truth(std::size_t{1} << frame->ids.size());
  for (auto m : frame->upsets)
    if (pred(detail::global_set(*frame, m))) truth.set(m);
  return AlgebraElem(std::move(p), support, std::move(truth));
}

}  // namespace pal
