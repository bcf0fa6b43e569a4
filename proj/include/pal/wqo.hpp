#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pal/lattice.hpp"
#include "pal/poset.hpp"

namespace pal {

/// Pairs i < j with seq[i] not below seq[j].
std::vector<std::pair<std::size_t, std::size_t>> bad_pairs(const Poset& p, const std::vector<std::size_t>& seq);

using Block = std::vector<std::size_t>;  // strictly increasing

/// Uniform front [N]^k: every k-subset of {0, ..., N-1}, a finite stand-in
/// for a barrier.
class Front {
 public:
  /// Throws BadArity unless 1 <= k <= N.
  Front(std::size_t k, std::size_t horizon);

  std::size_t arity() const { return k_; }
  std::size_t horizon() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::optional<std::size_t> index_of(const Block& b) const;

  /// s ◁ t: s minus its minimum is an initial segment of t. For k = 1 the
  /// relation is oriented by position: {i} ◁ {j} iff i < j.
  bool precedes(const Block& s, const Block& t) const;
  std::vector<Block> successors(const Block& s) const;

 private:
  std::size_t k_;
  std::size_t n_;
  std::vector<Block> blocks_;
  std::map<Block, std::size_t> index_;
};

/// {s ∪ t : s ◁ t}, sorted.
std::vector<Block> front_square(const Front& f);

struct ArrayLabeling {
  Front front;
  std::vector<std::size_t> label;  // per block index, an element of the target poset
};

/// f({i,j}) = (i,j) on front(2, N), into rado_prefix(N).
ArrayLabeling rado_identity_labeling(const Poset& rado, std::size_t horizon);

enum class ArrayVerdict { Bad, Perfect, Mixed };
const char* to_string(ArrayVerdict v);

struct ArrayClassification {
  ArrayVerdict verdict = ArrayVerdict::Perfect;
  std::size_t good_pairs = 0;  // s ◁ t with f(s) <= f(t)
  std::size_t bad_pairs = 0;
  std::optional<std::pair<Block, Block>> good_witness;
  std::optional<std::pair<Block, Block>> bad_witness;
};

/// With no ◁-pairs at all the labeling is reported perfect.
ArrayClassification classify_array(const Poset& p, const ArrayLabeling& arr);

/// Size of a largest antichain of P (exact).
std::size_t narrowness_probe(const Poset& p);
/// Number of elements on a longest strictly descending chain of P.
std::size_t wellfoundedness_probe(const Poset& p);

}  // namespace pal
