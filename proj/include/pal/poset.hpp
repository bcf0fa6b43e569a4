#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pal/bits.hpp"

namespace pal {

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

/// Finite partial order over dense ids 0..n-1, fully materialized.
///
/// Posets are immutable once built and are shared by pointer between the
/// algebra elements, spaces and morphisms that refer to them.
class Poset {
 public:
  using Relation = std::vector<std::pair<std::string, std::string>>;

  /// Closes `relations` reflexively and transitively. Throws Cycle when the
  /// closure identifies two distinct elements, DuplicateName on repeated
  /// names, UnknownElement on a relation mentioning an undeclared name.
  static PosetPtr build(std::string name, std::vector<std::string> names, const Relation& relations);
  static PosetPtr build(std::string name, std::vector<std::string> names,
                        const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  const std::string& name() const { return name_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& element_name(std::size_t p) const;
  std::size_t index_of(const std::string& name) const;

  ElemSet all() const { return ElemSet::range(size()); }

  bool leq(std::size_t p, std::size_t q) const;
  bool lt(std::size_t p, std::size_t q) const { return p != q && leq(p, q); }
  bool incomparable(std::size_t p, std::size_t q) const { return !leq(p, q) && !leq(q, p); }

  /// {q : p <= q}
  const ElemSet& above(std::size_t p) const;
  /// {q : q <= p}
  const ElemSet& below(std::size_t p) const;

  ElemSet upset(const ElemSet& s) const;
  ElemSet downset(const ElemSet& s) const;
  ElemSet minimals(const ElemSet& s) const;
  ElemSet maximals(const ElemSet& s) const;

  bool is_up_closed(const ElemSet& s) const { return upset(s) == s; }
  bool is_down_closed(const ElemSet& s) const { return downset(s) == s; }
  bool is_antichain(const ElemSet& s) const;
  bool is_chain() const;

  /// Number of pairs p < q.
  std::size_t strict_pairs() const;
  /// Covering pairs (transitive reduction).
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  /// Throws UnknownElement for ids outside the poset.
  void check_ids(const ElemSet& s) const;
  ElemSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const ElemSet& s) const;

  /// Same names in the same order with the same relation.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  Poset(std::string name, std::vector<std::string> names, std::vector<ElemSet> up);

  std::string name_;
  std::vector<std::string> names_;
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
};

/// Same object or structurally equal.
bool same_poset(const PosetPtr& a, const PosetPtr& b);

/// Default cap for segment enumerations.
inline constexpr std::size_t kDefaultEnumerationCap = 1u << 22;

/// All down-closed subsets in canonical order (ElemSet::operator<).
std::vector<ElemSet> initial_segments(const Poset& p, std::size_t cap = kDefaultEnumerationCap);
/// All up-closed subsets in canonical order.
std::vector<ElemSet> final_segments(const Poset& p, std::size_t cap = kDefaultEnumerationCap);
/// Branching enumeration of up-sets (no subset scan). Unsorted.
std::vector<ElemSet> final_segments_branching(const Poset& p, std::size_t cap = kDefaultEnumerationCap);

struct LinearAugmentation {
  PosetPtr chain;                     // element i of `chain` is `order[i]` of the source
  std::vector<std::size_t> order;     // position -> source element
  std::vector<std::size_t> position;  // source element -> position
};

/// Seeded random topological linearization.
LinearAugmentation linear_augmentation(const Poset& p, std::uint64_t seed);

namespace posets {

PosetPtr chain(std::size_t n);
PosetPtr antichain(std::size_t n);
PosetPtr dual(const Poset& p);
PosetPtr disjoint_sum(const std::vector<PosetPtr>& parts);
/// Parts indexed by the elements of `index`; (x, p) <= (y, q) iff x < y, or x = y and p <= q.
PosetPtr lex_sum(const Poset& index, const std::vector<PosetPtr>& parts,
                 std::size_t max_size = kMaxElements);
PosetPtr product(const Poset& a, const Poset& b, std::size_t max_size = kMaxElements);
/// {(i,j) : 0 <= i < j <= n}, (i,j) <= (k,l) iff (i = k and j <= l) or j < k.
PosetPtr rado_prefix(std::size_t n, std::size_t max_size = kMaxElements);
/// Random DAG on 0..n-1 (edge i->j, i<j, with probability `density`), closed.
PosetPtr random_poset(std::size_t n, double density, std::uint64_t seed,
                      std::size_t max_size = kMaxElements);
/// a < c, b < c
PosetPtr v3();

}  // namespace posets

}  // namespace pal
