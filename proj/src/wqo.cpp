#include "pal/wqo.hpp"

#include <algorithm>

#include "pal/error.hpp"

namespace pal {

std::vector<std::pair<std::size_t, std::size_t>> bad_pairs(const Poset& p, const std::vector<std::size_t>& seq) {
  for (auto e : seq)
    if (e >= p.size()) throw Error(ErrorKind::UnknownElement, "sequence element out of range");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (!p.leq(seq[i], seq[j])) out.emplace_back(i, j);
  return out;
}

Front::Front(std::size_t k, std::size_t horizon) : k_(k), n_(horizon) {
  if (k < 1 || k > horizon)
    throw Error(ErrorKind::BadArity, "front needs 1 <= k <= N (k=" + std::to_string(k) + ", N=" +
                                         std::to_string(horizon) + ")");
  Block b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = i;
  while (true) {
    index_.emplace(b, blocks_.size());
    blocks_.push_back(b);
    std::size_t i = k;
    while (i > 0 && b[i - 1] == horizon - k + (i - 1)) --i;
    if (i == 0) break;
    ++b[i - 1];
    for (std::size_t j = i; j < k; ++j) b[j] = b[j - 1] + 1;
  }
}

std::optional<std::size_t> Front::index_of(const Block& b) const {
  auto it = index_.find(b);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Front::precedes(const Block& s, const Block& t) const {
  if (k_ == 1) return s[0] < t[0];
  // Same arity: s \ {min s} must be the first k-1 entries of t.
  return std::equal(s.begin() + 1, s.end(), t.begin());
}

std::vector<Block> Front::successors(const Block& s) const {
  std::vector<Block> out;
  for (const auto& t : blocks_)
    if (precedes(s, t)) out.push_back(t);
  return out;
}

std::vector<Block> front_square(const Front& f) {
  std::vector<Block> out;
  for (const auto& s : f.blocks())
    for (const auto& t : f.successors(s)) {
      Block u;
      std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
      out.push_back(std::move(u));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ArrayLabeling rado_identity_labeling(const Poset& rado, std::size_t horizon) {
  ArrayLabeling arr{Front(2, horizon), {}};
  for (const auto& b : arr.front.blocks())
    arr.label.push_back(rado.index_of("(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + ")"));
  return arr;
}

const char* to_string(ArrayVerdict v) {
  switch (v) {
    case ArrayVerdict::Bad: return "bad";
    case ArrayVerdict::Perfect: return "perfect";
    case ArrayVerdict::Mixed: return "mixed";
  }
  return "?";
}

ArrayClassification classify_array(const Poset& p, const ArrayLabeling& arr) {
  const auto& blocks = arr.front.blocks();
  if (arr.label.size() != blocks.size()) throw Error(ErrorKind::PremiseFailed, "labeling is not total on the front");
  ArrayClassification out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (!arr.front.precedes(blocks[i], blocks[j])) continue;
      if (p.leq(arr.label[i], arr.label[j])) {
        ++out.good_pairs;
        if (!out.good_witness) out.good_witness = std::make_pair(blocks[i], blocks[j]);
      } else {
        ++out.bad_pairs;
        if (!out.bad_witness) out.bad_witness = std::make_pair(blocks[i], blocks[j]);
      }
    }
  if (out.bad_pairs == 0)
    out.verdict = ArrayVerdict::Perfect;
  else if (out.good_pairs == 0)
    out.verdict = ArrayVerdict::Bad;
  else
    out.verdict = ArrayVerdict::Mixed;
  return out;
}

std::size_t narrowness_probe(const Poset& p) {
  return max_antichain(p.size(), [&](std::size_t a, std::size_t b) { return p.leq(a, b); }, kMaxElements)
      .members.size();
}

std::size_t wellfoundedness_probe(const Poset& p) {
  return longest_descending_chain(p.size(), [&](std::size_t a, std::size_t b) { return p.leq(a, b); }).size();
}

}  // namespace pal
