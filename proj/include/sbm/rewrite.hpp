#ifndef SBM_REWRITE_HPP
#define SBM_REWRITE_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sbm/word.hpp"

namespace sbm {

/// The full positive-equivalence class of a word. All members share length and
/// Degrees (the positive relations are homogeneous); members are sorted, so
/// front() is the base.
struct EquivalenceClass {
  Context ctx;
  std::vector<PositiveWord> members;
};

/// Raised when a class enumeration or search would exceed the member cap.
/// Carries whatever part of the class had been discovered.
class CapExceeded : public Error {
public:
  CapExceeded(std::size_t cap, Context ctx, std::shared_ptr<const std::vector<detail::PWord>> partial)
      : Error("equivalence-class cap of " + std::to_string(cap) + " members exceeded"),
        cap_(cap), ctx_(ctx), partial_(std::move(partial)) {}

  std::size_t cap() const { return cap_; }
  std::size_t members_found() const { return partial_ ? partial_->size() : 0; }

  EquivalenceClass partial_class() const {
    EquivalenceClass ec{ctx_, {}};
    if (partial_) {
      ec.members.reserve(partial_->size());
      for (const auto& p : *partial_) ec.members.push_back(detail::unpack(p, ctx_));
    }
    return ec;
  }

private:
  std::size_t cap_;
  Context ctx_;
  std::shared_ptr<const std::vector<detail::PWord>> partial_;
};

/// Split of a positive word into its maximal braid left-divisor and the rest.
struct MaxDivisorSplit {
  PositiveWord s_part; // sigma letters only
  PositiveWord t_part; // no sigma_i left-divides this
};

namespace detail {

// Emits every word reachable from `w` by one application of one defining
// relation of the positive singular braid monoid, at every position, in a
// fixed deterministic order.
template <class F>
void for_each_neighbor(const PWord& w, F&& emit) {
  const std::size_t len = w.size();
  PWord buf;
  for (std::size_t p = 0; p + 1 < len; ++p) {
    const PLetter a = static_cast<PLetter>(w[p]);
    const PLetter b = static_cast<PLetter>(w[p + 1]);
    const int ia = pidx(a), ib = pidx(b);
    const int gap = ia > ib ? ia - ib : ib - ia;

    // two-letter commutations
    bool swaps = false;
    if (pis_x(a) == pis_x(b)) {
      swaps = gap > 1; // sigma/sigma and x/x commute at distance > 1
    } else {
      swaps = gap != 1; // sigma/x commute unless adjacent indices
    }
    if (swaps && a != b) {
      buf = w;
      buf[p] = static_cast<char>(b);
      buf[p + 1] = static_cast<char>(a);
      emit(buf);
    }

    // three-letter relations
    if (p + 2 < len) {
      const PLetter c = static_cast<PLetter>(w[p + 2]);
      const int ic = pidx(c);
      if (!pis_x(a) && !pis_x(b)) {
        if (!pis_x(c)) {
          // braid: sigma_i sigma_j sigma_i = sigma_j sigma_i sigma_j, |i-j| = 1
          if (ia == ic && gap == 1) {
            buf = w;
            buf[p] = static_cast<char>(b);
            buf[p + 1] = static_cast<char>(a);
            buf[p + 2] = static_cast<char>(b);
            emit(buf);
          }
        } else if (gap == 1 && ic == ia) {
          // sigma_i sigma_{i+1} x_i -> x_{i+1} sigma_i sigma_{i+1}  (and the
          // mirrored-index rule, which has the same shape)
          buf = w;
          buf[p] = static_cast<char>(px(ib));
          buf[p + 1] = static_cast<char>(a);
          buf[p + 2] = static_cast<char>(b);
          emit(buf);
        }
      } else if (pis_x(a) && !pis_x(b) && !pis_x(c)) {
        const int gbc = ib > ic ? ib - ic : ic - ib;
        if (gbc == 1 && ia == ic) {
          // x_{i+1} sigma_i sigma_{i+1} -> sigma_i sigma_{i+1} x_i  (and mirror)
          buf = w;
          buf[p] = static_cast<char>(b);
          buf[p + 1] = static_cast<char>(c);
          buf[p + 2] = static_cast<char>(px(ib));
          emit(buf);
        }
      }
    }
  }
}

struct PWordHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};
struct PWordEq {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return a == b; }
};

using PSet = std::unordered_set<PWord, PWordHash, PWordEq>;

enum class SearchOutcome { found, exhausted, budget };

} // namespace detail

/// Positive-equivalence oracle: breadth-first closure of a word under the
/// defining relations. Everything above it (divisibility, bases, normal forms)
/// reduces to class searches. One instance memoizes enumerated classes keyed by
/// the queried word and by its base; confine an instance to one thread.
class Oracle {
public:
  static constexpr std::size_t default_cap = 2'000'000;

  explicit Oracle(std::size_t member_cap = default_cap) : cap_(member_cap) {}

  std::size_t member_cap() const { return cap_; }

  /// All words one relation application away from w, sorted, duplicates removed.
  std::vector<PositiveWord> neighbors(const PositiveWord& w) const {
    std::vector<detail::PWord> out;
    detail::for_each_neighbor(detail::pack(w), [&](const detail::PWord& nb) { out.push_back(nb); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<PositiveWord> words;
    words.reserve(out.size());
    for (const auto& p : out) words.push_back(detail::unpack(p, w.ctx()));
    return words;
  }

  /// Complete equivalence class of w (BFS closure), members sorted.
  EquivalenceClass enumerate_class(const PositiveWord& w, std::optional<std::size_t> cap = {}) {
    auto cls = class_of(detail::pack(w), w.ctx(), cap.value_or(cap_));
    EquivalenceClass ec{w.ctx(), {}};
    ec.members.reserve(cls->size());
    for (const auto& p : *cls) ec.members.push_back(detail::unpack(p, w.ctx()));
    return ec;
  }

  /// Equality in the positive monoid: membership of b in the class of a.
  /// Quick-rejects on degrees, length and the permutation image first.
  bool positively_equal(const PositiveWord& a, const PositiveWord& b) {
    detail::require_same_ctx(a.ctx(), b.ctx());
    return pequal(detail::pack(a), detail::pack(b), a.ctx());
  }

  /// Lexicographically smallest member of the class of w.
  PositiveWord base(const PositiveWord& w) {
    return detail::unpack(class_of(detail::pack(w), w.ctx(), cap_)->front(), w.ctx());
  }

  /// Quotient Z with w = d Z in the positive monoid, if d left-divides w.
  /// Z is determined up to positive equality; the returned spelling is the
  /// suffix of the first witness found.
  std::optional<PositiveWord> left_divide(const PositiveWord& w, const PositiveWord& d) {
    detail::require_same_ctx(w.ctx(), d.ctx());
    auto q = pdivide_left(detail::pack(w), detail::pack(d), w.ctx());
    if (!q) return std::nullopt;
    return detail::unpack(*q, w.ctx());
  }

  /// Mirror of left_divide: Z with w = Z d, via the reversal anti-automorphism.
  std::optional<PositiveWord> right_divide(const PositiveWord& w, const PositiveWord& d) {
    detail::require_same_ctx(w.ctx(), d.ctx());
    detail::PWord rw = detail::pack(w), rd = detail::pack(d);
    std::reverse(rw.begin(), rw.end());
    std::reverse(rd.begin(), rd.end());
    auto q = pdivide_left(rw, rd, w.ctx());
    if (!q) return std::nullopt;
    std::reverse(q->begin(), q->end());
    return detail::unpack(*q, w.ctx());
  }

  /// Greedy maximal braid left-divisor: peel the first sigma_i (i ascending)
  /// that left-divides the remainder until none does. The result divides every
  /// braid left-divisor of w.
  MaxDivisorSplit max_braid_divisor(const PositiveWord& w) {
    detail::PWord s_part;
    detail::PWord rest = detail::pack(w);
    const int n = w.ctx().n;
    for (;;) {
      bool hit = false;
      for (int i = 1; i < n && !hit; ++i) {
        detail::PWord d(1, static_cast<char>(detail::psig(i)));
        if (auto q = pdivide_left(rest, d, w.ctx())) {
          s_part.push_back(static_cast<char>(detail::psig(i)));
          rest = std::move(*q);
          hit = true;
        }
      }
      if (!hit) break;
    }
    return {detail::unpack(s_part, w.ctx()), detail::unpack(rest, w.ctx())};
  }

  /// All i such that x_i left-divides w, ascending.
  std::vector<int> x_divisors(const PositiveWord& w) {
    std::vector<int> out;
    detail::PWord p = detail::pack(w);
    for (int i = 1; i < w.ctx().n; ++i) {
      detail::PWord d(1, static_cast<char>(detail::px(i)));
      if (pdivide_left(p, d, w.ctx())) out.push_back(i);
    }
    return out;
  }

  // -- packed-level entry points shared with the normal-form machinery --

  std::shared_ptr<const std::vector<detail::PWord>> class_of(const detail::PWord& start,
                                                             Context ctx, std::size_t cap) {
    if (auto it = class_cache_.find(start); it != class_cache_.end()) return it->second;

    std::vector<detail::PWord> order{start};
    detail::PSet seen;
    seen.insert(start);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      // `order` may reallocate while we expand, so copy the current word.
      detail::PWord cur = order[qi];
      detail::for_each_neighbor(cur, [&](const detail::PWord& nb) {
        if (seen.insert(nb).second) {
          order.push_back(nb);
          if (order.size() > cap)
            throw CapExceeded(cap, ctx,
                              std::make_shared<const std::vector<detail::PWord>>(std::move(order)));
        }
      });
    }
    std::sort(order.begin(), order.end());
    auto sp = std::make_shared<const std::vector<detail::PWord>>(std::move(order));
    class_cache_[start] = sp;
    class_cache_[sp->front()] = sp; // memoize by the base too
    return sp;
  }

  // BFS for the first member satisfying pred (lex-smallest satisfying member
  // when the class is already cached). A search that stops on `budget` decided
  // nothing; `exhausted` runs populate the class cache as a side effect.
  template <class Pred>
  detail::SearchOutcome find_member(const detail::PWord& start, Context ctx, Pred pred,
                                    std::size_t budget, detail::PWord* out) {
    using detail::SearchOutcome;
    if (auto it = class_cache_.find(start); it != class_cache_.end()) {
      for (const auto& m : *it->second)
        if (pred(m)) {
          if (out) *out = m;
          return SearchOutcome::found;
        }
      return SearchOutcome::exhausted;
    }
    if (pred(start)) {
      if (out) *out = start;
      return SearchOutcome::found;
    }
    std::vector<detail::PWord> order{start};
    detail::PSet seen;
    seen.insert(start);
    bool found = false;
    bool over_budget = false;
    for (std::size_t qi = 0; qi < order.size() && !found && !over_budget; ++qi) {
      detail::PWord cur = order[qi];
      detail::for_each_neighbor(cur, [&](const detail::PWord& nb) {
        if (found || over_budget) return;
        if (seen.insert(nb).second) {
          if (pred(nb)) {
            found = true;
            if (out) *out = nb;
            return;
          }
          order.push_back(nb);
          if (order.size() > budget) over_budget = true;
        }
      });
    }
    if (found) return SearchOutcome::found;
    if (over_budget) return SearchOutcome::budget;
    std::sort(order.begin(), order.end());
    auto sp = std::make_shared<const std::vector<detail::PWord>>(std::move(order));
    class_cache_[start] = sp;
    class_cache_[sp->front()] = sp;
    return SearchOutcome::exhausted;
  }

  // Complete best-first search for a class member whose first letter is c,
  // expanding spellings with a matching letter nearest the front first. Visits
  // the same class as the BFS search, only in a witness-friendly order; long
  // words keep the frontier from degenerating into a full ball.
  detail::SearchOutcome find_initial(const detail::PWord& start, detail::PLetter c, Context ctx,
                                     std::size_t budget, detail::PWord* out) {
    using detail::SearchOutcome;
    const char cc = static_cast<char>(c);
    if (auto it = class_cache_.find(start); it != class_cache_.end()) {
      for (const auto& m : *it->second)
        if (!m.empty() && m[0] == cc) {
          if (out) *out = m;
          return SearchOutcome::found;
        }
      return SearchOutcome::exhausted;
    }
    if (!start.empty() && start[0] == cc) {
      if (out) *out = start;
      return SearchOutcome::found;
    }
    auto score = [&](const detail::PWord& w) {
      std::size_t at = w.find(cc);
      return static_cast<int>(at == detail::PWord::npos ? w.size() : at);
    };
    // ordered by depth + weighted distance of the wanted letter from the front
    std::set<std::tuple<int, int, detail::PWord>> agenda;
    detail::PSet seen;
    seen.insert(start);
    agenda.emplace(3 * score(start), 0, start);
    bool found = false;
    while (!agenda.empty() && !found) {
      auto [f, g, cur] = *agenda.begin();
      agenda.erase(agenda.begin());
      detail::for_each_neighbor(cur, [&](const detail::PWord& nb) {
        if (found) return;
        if (seen.insert(nb).second) {
          if (nb[0] == cc) {
            found = true;
            if (out) *out = nb;
            return;
          }
          agenda.emplace(g + 1 + 3 * score(nb), g + 1, nb);
        }
      });
      if (seen.size() > budget) return SearchOutcome::budget;
    }
    if (found) return SearchOutcome::found;
    // agenda drained: the whole class was visited
    std::vector<detail::PWord> order(seen.begin(), seen.end());
    std::sort(order.begin(), order.end());
    auto sp = std::make_shared<const std::vector<detail::PWord>>(std::move(order));
    class_cache_[start] = sp;
    class_cache_[sp->front()] = sp;
    return SearchOutcome::exhausted;
  }

  // Peeling decision procedure for positive equality: strip equal end letters,
  // then divide one side by the other's head letter (cancellativity), searching
  // both candidate peels with doubled budgets and taking the cheaper witness.
  bool pequal(detail::PWord u, detail::PWord v, Context ctx) {
    using detail::SearchOutcome;
    if (u.size() != v.size()) return false;
    if (detail::psigma_count(u) != detail::psigma_count(v)) return false;
    if (detail::permutation_of(u, ctx.n) != detail::permutation_of(v, ctx.n)) return false;

    while (!u.empty()) {
      std::size_t lo = 0, hi = u.size();
      while (lo < hi && u[lo] == v[lo]) ++lo;
      while (hi > lo && u[hi - 1] == v[hi - 1]) --hi;
      u = u.substr(lo, hi - lo);
      v = v.substr(lo, hi - lo);
      if (u.empty()) return true;

      bool peeled = false;
      for (std::size_t budget = 1024; !peeled; budget *= 4) {
        if (budget > cap_) budget = cap_;
        detail::PWord witness;
        SearchOutcome in_v =
            find_initial(v, static_cast<detail::PLetter>(u[0]), ctx, budget, &witness);
        if (in_v == SearchOutcome::found) {
          v = witness.substr(1);
          u.erase(0, 1);
          peeled = true;
          break;
        }
        if (in_v == SearchOutcome::exhausted) return false; // head(u) does not divide v
        SearchOutcome in_u =
            find_initial(u, static_cast<detail::PLetter>(v[0]), ctx, budget, &witness);
        if (in_u == SearchOutcome::found) {
          u = witness.substr(1);
          v.erase(0, 1);
          peeled = true;
          break;
        }
        if (in_u == SearchOutcome::exhausted) return false;
        if (budget >= cap_) throw CapExceeded(cap_, ctx, nullptr);
      }
    }
    return true;
  }

  // Bounded divisibility probe: `budget` limits the class search; a `budget`
  // outcome decides nothing and leaves the cache untouched.
  detail::SearchOutcome pdivide_left_bounded(const detail::PWord& w, const detail::PWord& d,
                                             Context ctx, std::size_t budget,
                                             std::optional<detail::PWord>* quotient) {
    using detail::SearchOutcome;
    if (quotient) quotient->reset();
    if (d.empty()) {
      if (quotient) *quotient = w;
      return SearchOutcome::found;
    }
    if (d.size() > w.size() || detail::psigma_count(d) > detail::psigma_count(w) ||
        detail::px_count(d) > detail::px_count(w))
      return SearchOutcome::exhausted;

    detail::PWord key = w;
    key.push_back('\0');
    key.append(d);
    if (auto it = div_cache_.find(key); it != div_cache_.end()) {
      if (quotient) *quotient = it->second;
      return it->second ? SearchOutcome::found : SearchOutcome::exhausted;
    }

    detail::PWord witness;
    detail::SearchOutcome oc;
    if (d.size() == 1) {
      oc = find_initial(w, static_cast<detail::PLetter>(d[0]), ctx, budget, &witness);
    } else {
      auto dcls = class_of(d, ctx, cap_);
      oc = find_member(
          w, ctx,
          [&](const detail::PWord& c) {
            return std::binary_search(dcls->begin(), dcls->end(),
                                      std::string_view(c).substr(0, d.size()));
          },
          budget, &witness);
    }
    if (oc == detail::SearchOutcome::budget) return oc;
    std::optional<detail::PWord> result;
    if (oc == detail::SearchOutcome::found) result = witness.substr(d.size());
    if (quotient) *quotient = result;
    div_cache_[std::move(key)] = result;
    return oc;
  }

  std::optional<detail::PWord> pdivide_left(const detail::PWord& w, const detail::PWord& d,
                                            Context ctx) {
    std::optional<detail::PWord> quotient;
    if (pdivide_left_bounded(w, d, ctx, cap_, &quotient) == detail::SearchOutcome::budget)
      throw CapExceeded(cap_, ctx, nullptr);
    return quotient;
  }

private:
  std::size_t cap_;
  std::unordered_map<detail::PWord, std::shared_ptr<const std::vector<detail::PWord>>> class_cache_;
  std::unordered_map<detail::PWord, std::optional<detail::PWord>> div_cache_;
};

} // namespace sbm

#endif
