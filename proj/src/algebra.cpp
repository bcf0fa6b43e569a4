#include "pal/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "pal/error.hpp"

namespace pal {

namespace detail {

namespace {

struct FrameKey {
  const Poset* poset;
  ElemSet support;
  friend bool operator==(const FrameKey&, const FrameKey&) = default;
};

struct FrameKeyHash {
  std::size_t operator()(const FrameKey& k) const {
    return std::hash<const void*>{}(k.poset) ^ (k.support.hash() * 31);
  }
};

struct CachedFrame {
  PosetPtr keep_alive;  // pins the address used in the key
  std::shared_ptr<const SupportFrame> frame;
};

std::shared_ptr<const SupportFrame> build_frame(const Poset& p, const ElemSet& support) {
  auto f = std::make_shared<SupportFrame>();
  f->ids = support.ids();
  const std::size_t k = f->ids.size();
  if (k > kMaxSupport)
    throw Error(ErrorKind::SizeLimit, "support of " + std::to_string(k) + " elements exceeds trace-table cap " +
                                          std::to_string(kMaxSupport));
  std::vector<std::uint32_t> strictly_above(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && p.leq(f->ids[i], f->ids[j])) strictly_above[i] |= 1u << j;
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(strictly_above[a]) < std::popcount(strictly_above[b]);
  });
  // Depth-first over the top-down order; include only when everything above is in.
  std::vector<std::pair<std::size_t, std::uint32_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [depth, mask] = stack.back();
    stack.pop_back();
    if (depth == k) {
      f->upsets.push_back(mask);
      continue;
    }
    std::size_t e = order[depth];
    stack.emplace_back(depth + 1, mask);
    if ((strictly_above[e] & ~mask) == 0) stack.emplace_back(depth + 1, mask | (1u << e));
  }
  std::sort(f->upsets.begin(), f->upsets.end());
  f->upset_indicator = Bits(std::size_t{1} << k);
  for (auto m : f->upsets) f->upset_indicator.set(m);
  return f;
}

}  // namespace

std::shared_ptr<const SupportFrame> frame_for(const PosetPtr& p, const ElemSet& support) {
  thread_local std::unordered_map<FrameKey, CachedFrame, FrameKeyHash> cache;
  FrameKey key{p.get(), support};
  if (auto it = cache.find(key); it != cache.end()) return it->second.frame;
  auto frame = build_frame(*p, support);
  if (cache.size() > 16384) cache.clear();
  cache.emplace(key, CachedFrame{p, frame});
  return frame;
}

std::uint32_t local_mask(const SupportFrame& f, const ElemSet& trace) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < f.ids.size(); ++i)
    if (trace.test(f.ids[i])) m |= 1u << i;
  return m;
}

ElemSet global_set(const SupportFrame& f, std::uint32_t mask) {
  ElemSet s;
  for (std::size_t i = 0; i < f.ids.size(); ++i)
    if (mask >> i & 1u) s.set(f.ids[i]);
  return s;
}

}  // namespace detail

using detail::frame_for;
using detail::SupportFrame;

namespace {

void require_same(const AlgebraElem& a, const AlgebraElem& b) {
  if (!same_poset(a.poset(), b.poset()))
    throw Error(ErrorKind::PosetMismatch, "elements belong to different poset algebras");
}

// For each local bit of `outer`, the matching bit in `inner` (0 if absent).
std::vector<std::uint32_t> projection(const SupportFrame& outer, const SupportFrame& inner) {
  std::vector<std::uint32_t> bits(outer.ids.size(), 0);
  std::size_t j = 0;
  for (std::size_t i = 0; i < outer.ids.size(); ++i) {
    while (j < inner.ids.size() && inner.ids[j] < outer.ids[i]) ++j;
    if (j < inner.ids.size() && inner.ids[j] == outer.ids[i]) bits[i] = 1u << j;
  }
  return bits;
}

std::uint32_t project(std::uint32_t mask, const std::vector<std::uint32_t>& bits) {
  std::uint32_t out = 0;
  while (mask) {
    int i = std::countr_zero(mask);
    out |= bits[static_cast<std::size_t>(i)];
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

AlgebraElem AlgebraElem::gen(PosetPtr p, std::size_t elem) {
  if (elem >= p->size()) throw Error(ErrorKind::UnknownElement, "unknown element id " + std::to_string(elem));
  Bits truth(2);
  truth.set(1);
  return AlgebraElem(std::move(p), ElemSet::single(elem), std::move(truth));
}

AlgebraElem AlgebraElem::constant(PosetPtr p, bool value) {
  Bits truth(1, value);
  return AlgebraElem(std::move(p), ElemSet{}, std::move(truth));
}

AlgebraElem AlgebraElem::point(PosetPtr p, const ElemSet& segment) {
  if (!p->is_up_closed(segment)) throw Error(ErrorKind::NotUpClosed, "point requires a final segment");
  auto frame = frame_for(p, p->all());
  Bits truth(std::size_t{1} << frame->ids.size());
  truth.set(detail::local_mask(*frame, segment));
  ElemSet all = p->all();
  return AlgebraElem(std::move(p), all, std::move(truth));
}

bool AlgebraElem::eval(const ElemSet& final_segment) const {
  if (!poset_->is_up_closed(final_segment)) throw Error(ErrorKind::NotUpClosed, "evaluation point is not up-closed");
  return at_trace(final_segment & support_);
}

bool AlgebraElem::at_trace(const ElemSet& trace) const {
  auto frame = frame_for(poset_, support_);
  return truth_.test(detail::local_mask(*frame, trace));
}

AlgebraElem AlgebraElem::extend_to(const ElemSet& support) const {
  if (!support_.subset_of(support)) throw Error(ErrorKind::SizeLimit, "extend_to target must contain the support");
  if (support == support_) return *this;
  auto outer = frame_for(poset_, support);
  auto inner = frame_for(poset_, support_);
  auto bits = projection(*outer, *inner);
  Bits truth(std::size_t{1} << outer->ids.size());
  for (auto m : outer->upsets)
    if (truth_.test(project(m, bits))) truth.set(m);
  return AlgebraElem(poset_, support, std::move(truth));
}

std::vector<ElemSet> AlgebraElem::traces() const {
  auto frame = frame_for(poset_, support_);
  std::vector<ElemSet> out;
  for (auto m : frame->upsets) out.push_back(detail::global_set(*frame, m));
  return out;
}

AlgebraElem combine(const AlgebraElem& a, const AlgebraElem& b, int op) {
  require_same(a, b);
  const ElemSet u = a.support_ | b.support_;
  auto outer = frame_for(a.poset_, u);
  auto fa = frame_for(a.poset_, a.support_);
  auto fb = frame_for(a.poset_, b.support_);
  auto pa = projection(*outer, *fa);
  auto pb = projection(*outer, *fb);
  Bits truth(std::size_t{1} << outer->ids.size());
  for (auto m : outer->upsets) {
    bool x = a.truth_.test(project(m, pa));
    bool y = b.truth_.test(project(m, pb));
    bool r = false;
    switch (op) {
      case 0: r = x && y; break;
      case 1: r = x || y; break;
      case 2: r = x != y; break;
      case 3: r = x && !y; break;
    }
    if (r) truth.set(m);
  }
  return AlgebraElem(a.poset_, u, std::move(truth));
}

AlgebraElem meet(const AlgebraElem& a, const AlgebraElem& b) { return combine(a, b, 0); }
AlgebraElem join(const AlgebraElem& a, const AlgebraElem& b) { return combine(a, b, 1); }
AlgebraElem difference(const AlgebraElem& a, const AlgebraElem& b) { return combine(a, b, 3); }

AlgebraElem complement(const AlgebraElem& e) {
  auto frame = frame_for(e.poset_, e.support_);
  return AlgebraElem(e.poset_, e.support_, e.truth_ ^ frame->upset_indicator);
}

bool is_zero(const AlgebraElem& e) { return e.table().none(); }

bool equals(const AlgebraElem& a, const AlgebraElem& b) {
  require_same(a, b);
  if (a.support() == b.support()) return a.table() == b.table();
  return is_zero(combine(a, b, 2));
}

bool leq(const AlgebraElem& a, const AlgebraElem& b) { return is_zero(difference(a, b)); }

AlgebraElem support_reduce(const AlgebraElem& e) {
  AlgebraElem cur = e;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s : cur.support_.ids()) {
      auto frame = frame_for(cur.poset_, cur.support_);
      std::size_t bit = 0;
      while (frame->ids[bit] != s) ++bit;
      const std::uint32_t sbit = 1u << bit;
      bool removable = true;
      for (auto m : frame->upsets) {
        if (m & sbit) continue;
        // m is a trace without s; compare against the trace with s added.
        if (frame->upset_indicator.test(m | sbit) && cur.truth_.test(m) != cur.truth_.test(m | sbit)) {
          removable = false;
          break;
        }
      }
      if (!removable) continue;
      ElemSet smaller = cur.support_;
      smaller.reset(s);
      auto inner = frame_for(cur.poset_, smaller);
      auto back = projection(*inner, *frame);  // inner bit -> outer bit
      Bits truth(std::size_t{1} << inner->ids.size());
      for (auto m : inner->upsets) {
        std::uint32_t outer_mask = project(m, back);
        // Realize the trace in the old support: with s when s is forced in.
        if (!frame->upset_indicator.test(outer_mask)) outer_mask |= sbit;
        if (cur.truth_.test(outer_mask)) truth.set(m);
      }
      cur = AlgebraElem(cur.poset_, smaller, std::move(truth));
      changed = true;
      break;
    }
  }
  return cur;
}

Bits canonical_table(const AlgebraElem& e) { return e.extend_to(e.poset()->all()).table(); }

AlgebraElem elementary_product(const PosetPtr& p, const ElemSet& pos, const ElemSet& neg) {
  p->check_ids(pos);
  p->check_ids(neg);
  return AlgebraElem::tabulate(p, pos | neg,
                               [&](const ElemSet& t) { return pos.subset_of(t) && !neg.intersects(t); });
}

AlgebraElem elementary_product(const PosetPtr& p, const ElementaryProduct& prod) {
  return elementary_product(p, prod.pos, prod.neg);
}

bool is_zero_syntactic(const Poset& p, const ElemSet& pos, const ElemSet& neg) {
  bool found = false;
  pos.for_each([&](std::size_t a) {
    if (p.above(a).intersects(neg)) found = true;
  });
  p.check_ids(neg);
  return found;
}

std::vector<ElementaryProduct> to_dnf(const AlgebraElem& e) {
  AlgebraElem r = support_reduce(e);
  const Poset& p = *r.poset();
  std::vector<ElementaryProduct> out;
  for (const auto& t : r.traces())
    if (r.at_trace(t)) out.push_back({p.minimals(t), p.maximals(r.support() - t)});
  return out;
}

AlgebraElem from_dnf(const PosetPtr& p, const std::vector<ElementaryProduct>& dnf) {
  AlgebraElem acc = AlgebraElem::zero(p);
  for (const auto& prod : dnf) acc = join(acc, elementary_product(p, prod));
  return acc;
}

std::string format_product(const Poset& p, const ElementaryProduct& prod) {
  std::string out;
  if (!prod.pos.empty()) {
    out = "x{";
    bool first = true;
    for (const auto& n : p.names_of(prod.pos)) {
      out += (first ? "" : ",") + n;
      first = false;
    }
    out += "}";
  }
  for (const auto& n : p.names_of(prod.neg)) out += (out.empty() ? "" : " & ") + std::string("-x{") + n + "}";
  return out.empty() ? "1" : out;
}

std::string format_dnf(const Poset& p, const std::vector<ElementaryProduct>& dnf) {
  if (dnf.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < dnf.size(); ++i) out += (i ? " | " : "") + format_product(p, dnf[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Expressions

namespace {

class Parser {
 public:
  Parser(const Poset& p, std::string_view text) : poset_(p), text_(text) {}

  Expr parse() {
    Expr e = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_), {std::string(text_)});
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_or() {
    Expr e = parse_and();
    while (accept('|')) e = Expr::disj(std::move(e), parse_and());
    return e;
  }
  Expr parse_and() {
    Expr e = parse_not();
    while (accept('&')) e = Expr::conj(std::move(e), parse_not());
    return e;
  }
  Expr parse_not() {
    if (accept('!')) return Expr::negate(parse_not());
    return parse_atom();
  }
  Expr parse_atom() {
    skip_ws();
    if (accept('(')) {
      Expr e = parse_or();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (accept('0')) return Expr::zero();
    if (accept('1')) return Expr::one();
    if (accept('x')) {
      if (!accept('(')) fail("expected '(' after x");
      // Names may themselves contain balanced parentheses, e.g. x((0,1)).
      std::size_t start = pos_;
      int depth = 0;
      while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (c == '(') ++depth;
        if (c == ')') {
          if (depth == 0) break;
          --depth;
        }
        ++pos_;
      }
      if (pos_ == text_.size()) fail("unterminated x(...)");
      std::string name(text_.substr(start, pos_ - start));
      ++pos_;
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
      return Expr::var(poset_.index_of(name));
    }
    fail("expected an atom");
  }

  const Poset& poset_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const Poset& p, std::string_view text) { return Parser(p, text).parse(); }

std::string format_expr(const Poset& p, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Zero: return "0";
    case Expr::Kind::One: return "1";
    case Expr::Kind::Gen: return "x(" + p.element_name(e.gen) + ")";
    case Expr::Kind::Not: return "!" + format_expr(p, e.args[0]);
    case Expr::Kind::And: return "(" + format_expr(p, e.args[0]) + " & " + format_expr(p, e.args[1]) + ")";
    case Expr::Kind::Or: return "(" + format_expr(p, e.args[0]) + " | " + format_expr(p, e.args[1]) + ")";
  }
  return "?";
}

AlgebraElem evaluate(const PosetPtr& p, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Zero: return AlgebraElem::zero(p);
    case Expr::Kind::One: return AlgebraElem::one(p);
    case Expr::Kind::Gen: return AlgebraElem::gen(p, e.gen);
    case Expr::Kind::Not: return complement(evaluate(p, e.args[0]));
    case Expr::Kind::And: return meet(evaluate(p, e.args[0]), evaluate(p, e.args[1]));
    case Expr::Kind::Or: return join(evaluate(p, e.args[0]), evaluate(p, e.args[1]));
  }
  return AlgebraElem::zero(p);
}

Expr random_expr(const Poset& p, std::size_t depth, std::mt19937_64& rng) {
  if (depth == 0 || p.size() == 0) {
    if (p.size() == 0) return (rng() & 1) ? Expr::one() : Expr::zero();
    std::uniform_int_distribution<std::size_t> pick(0, p.size() + 1);
    std::size_t g = pick(rng);
    if (g == p.size()) return Expr::zero();
    if (g == p.size() + 1) return Expr::one();
    return Expr::var(g);
  }
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return Expr::negate(random_expr(p, depth - 1, rng));
    case 1: return Expr::conj(random_expr(p, depth - 1, rng), random_expr(p, depth - 1, rng));
    case 2: return Expr::disj(random_expr(p, depth - 1, rng), random_expr(p, depth - 1, rng));
    default: return random_expr(p, 0, rng);
  }
}

}  // namespace pal
