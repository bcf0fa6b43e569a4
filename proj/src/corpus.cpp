#include "pal/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <string>

#include "pal/error.hpp"

namespace pal::corpus {

namespace {

using Matrix = std::vector<std::uint32_t>;  // row i: bit j set iff i <= j

std::uint64_t encode(const Matrix& m, const std::vector<std::size_t>& perm) {
  const std::size_t n = m.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) code = (code << 1) | ((m[perm[i]] >> perm[j]) & 1u);
  return code;
}

std::uint64_t canonical(const Matrix& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    best = std::min(best, encode(m, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Matrix decode(std::uint64_t code, std::size_t n) {
  Matrix m(n, 0);
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = n; j-- > 0;) {
      if (code & 1ULL) m[i] |= 1u << j;
      code >>= 1;
    }
  return m;
}

PosetPtr to_poset(const Matrix& m, std::size_t index) {
  const std::size_t n = m.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (m[i] >> j & 1u)) rel.emplace_back(i, j);
  return Poset::build("P" + std::to_string(n) + "_" + std::to_string(index), std::move(names), rel);
}

std::vector<Matrix> classes_uncached(std::size_t n);

std::vector<Matrix> classes(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Matrix>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  auto out = classes_uncached(n);
  std::lock_guard lock(mu);
  memo.emplace(n, out);
  return out;
}

std::vector<Matrix> classes_uncached(std::size_t n) {
  std::vector<Matrix> out;
  if (n == 0) {
    out.push_back({});
  } else {
    // Every poset arises from a smaller one by adding a maximal element above
    // some down-set.
    std::map<std::uint64_t, Matrix> seen;
    for (const auto& base : classes(n - 1)) {
      const std::size_t k = base.size();
      for (std::uint32_t down = 0; down < (1u << k); ++down) {
        bool closed = true;
        for (std::size_t i = 0; i < k && closed; ++i)
          if (down >> i & 1u)
            for (std::size_t j = 0; j < k; ++j)
              if ((base[j] >> i & 1u) && !(down >> j & 1u)) closed = false;
        if (!closed) continue;
        Matrix m = base;
        for (std::size_t i = 0; i < k; ++i)
          if (down >> i & 1u) m[i] |= 1u << k;
        m.push_back(1u << k);
        std::uint64_t code = canonical(m);
        seen.try_emplace(code, decode(code, n));
      }
    }
    for (auto& [code, m] : seen) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::uint64_t canonical_code(const Poset& p) {
  if (p.size() > 8) throw Error(ErrorKind::SizeLimit, "canonical code needs at most 8 elements");
  Matrix m(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    p.above(i).for_each([&](std::size_t j) { m[i] |= 1u << j; });
  return canonical(m);
}

std::vector<PosetPtr> nonisomorphic(std::size_t n) {
  if (n > 7) throw Error(ErrorKind::SizeLimit, "exhaustive corpus is limited to 7 elements");
  std::vector<PosetPtr> out;
  auto ms = classes(n);
  for (std::size_t i = 0; i < ms.size(); ++i) out.push_back(to_poset(ms[i], i));
  return out;
}

std::vector<PosetPtr> up_to(std::size_t max_n) {
  std::vector<PosetPtr> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto layer = nonisomorphic(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<PosetPtr> random(std::size_t count, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  std::vector<PosetPtr> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(posets::random_poset(n, density(rng), rng()));
  return out;
}

}  // namespace pal::corpus
