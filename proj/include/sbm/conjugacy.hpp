#ifndef SBM_CONJUGACY_HPP
#define SBM_CONJUGACY_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "sbm/garside.hpp"
#include "sbm/rewrite.hpp"
#include "sbm/word.hpp"

namespace sbm {

/// Units of SB_n are exactly the braids: deg_x = 0.
inline bool is_unit(const Word& w) { return degrees(w).x == 0; }

/// g^{-1} w g, unreduced; g must be a unit.
inline Word conjugate(const Word& w, const Word& g) {
  detail::require_same_ctx(w.ctx(), g.ctx());
  if (!is_unit(g)) throw NonInvertible("conjugator must be a unit (deg_x = 0)");
  return concat(concat(invert(g), w), g);
}

inline constexpr int default_strand_bound = 5;

/// All n! permutation braids (positive left-divisors of Delta), each in its
/// lex-minimal spelling, ordered by length then lexicographically. Includes
/// the empty word and Delta.
inline std::vector<PositiveWord> simple_elements(Oracle& oracle, int n,
                                                 int bound = default_strand_bound) {
  Context ctx(n);
  if (n > bound)
    throw BoundExceeded("strand count " + std::to_string(n) + " above bound " +
                        std::to_string(bound) + " for simple-element enumeration");
  // grow divisors of Delta letter by letter, one representative per permutation
  std::map<std::vector<unsigned char>, detail::PWord> reps;
  reps[detail::permutation_of("", n)] = detail::PWord();
  std::deque<detail::PWord> queue{detail::PWord()};
  while (!queue.empty()) {
    detail::PWord cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      detail::PWord cand = cur;
      cand.push_back(static_cast<char>(detail::psig(i)));
      if (!detail::pis_permutation_braid(cand, ctx)) continue;
      auto perm = detail::permutation_of(cand, n);
      if (reps.emplace(std::move(perm), cand).second) queue.push_back(cand);
    }
  }
  std::vector<detail::PWord> canonical;
  canonical.reserve(reps.size());
  for (auto& [perm, word] : reps)
    canonical.push_back(oracle.class_of(word, ctx, oracle.member_cap())->front());
  std::sort(canonical.begin(), canonical.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<PositiveWord> out;
  out.reserve(canonical.size());
  for (const auto& p : canonical) out.push_back(detail::unpack(p, ctx));
  return out;
}

/// The set of maximal-power normal forms in the conjugacy class; identical for
/// two elements iff they are conjugate under the braid group action.
struct SummitSet {
  Context ctx;
  int summit_power;
  std::vector<NormalForm> members; // sorted by base

  friend bool operator==(const SummitSet& a, const SummitSet& b) {
    return a.ctx == b.ctx && a.summit_power == b.summit_power && a.members == b.members;
  }
};

inline constexpr std::size_t default_summit_cap = 100'000;

namespace detail {

struct SummitOptions {
  int strand_bound = default_strand_bound;
  std::size_t member_cap = default_summit_cap;
};

// Closure under conjugation by simple elements, keeping only the maximal
// power discovered so far. Optionally records, for each member, a unit word
// conjugating the input to it.
inline SummitSet summit_closure(Oracle& oracle, const Word& w, SummitOptions opts,
                                std::vector<std::pair<NormalForm, Word>>* witnesses) {
  const Context ctx = w.ctx();
  if (ctx.n > opts.strand_bound)
    throw BoundExceeded("strand count " + std::to_string(ctx.n) + " above bound " +
                        std::to_string(opts.strand_bound) + " for summit-set closure");

  std::vector<Word> simples;
  for (const PositiveWord& s : simple_elements(oracle, ctx.n, opts.strand_bound))
    if (!s.empty()) simples.push_back(s.word());

  struct Entry {
    int power;
    PWord base;
    auto operator<=>(const Entry&) const = default;
  };
  auto to_entry = [](const NormalForm& nf) { return Entry{nf.power, pack(nf.base)}; };

  NormalForm start = normal_form(oracle, w);
  int max_power = start.power;
  std::map<Entry, Word> members; // member -> conjugating unit from w
  members.emplace(to_entry(start), Word(ctx));
  std::deque<std::pair<NormalForm, Word>> queue{{start, Word(ctx)}};

  while (!queue.empty()) {
    auto [cur, via] = std::move(queue.front());
    queue.pop_front();
    if (cur.power < max_power) continue; // superseded by a power jump
    Word cur_word = reconstruct(cur);
    for (const Word& s : simples) {
      NormalForm nf = normal_form(oracle, conjugate(cur_word, s));
      if (nf.power < max_power) continue;
      Word chain = concat(via, s);
      if (nf.power > max_power) {
        max_power = nf.power;
        members.clear();
        queue.clear();
      }
      if (members.emplace(to_entry(nf), chain).second) {
        if (members.size() > opts.member_cap) throw CapExceeded(opts.member_cap, ctx, nullptr);
        queue.emplace_back(nf, chain);
      }
    }
  }

  SummitSet out{ctx, max_power, {}};
  out.members.reserve(members.size());
  for (const auto& [entry, via] : members) {
    NormalForm nf{entry.power, unpack(entry.base, ctx)};
    out.members.push_back(nf);
    if (witnesses) witnesses->emplace_back(nf, via);
  }
  return out;
}

} // namespace detail

inline SummitSet summit_set(Oracle& oracle, const Word& w, int strand_bound = default_strand_bound,
                            std::size_t member_cap = default_summit_cap) {
  return detail::summit_closure(oracle, w, {strand_bound, member_cap}, nullptr);
}

/// Same closure, also reporting a conjugating unit for every member.
inline std::vector<std::pair<NormalForm, Word>> summit_set_traced(
    Oracle& oracle, const Word& w, int strand_bound = default_strand_bound,
    std::size_t member_cap = default_summit_cap) {
  std::vector<std::pair<NormalForm, Word>> out;
  detail::summit_closure(oracle, w, {strand_bound, member_cap}, &out);
  return out;
}

/// Conjugacy under the unit group: identical summit sets. Degrees are
/// conjugation invariants and reject early.
inline bool conjugate_p(Oracle& oracle, const Word& u, const Word& v,
                        int strand_bound = default_strand_bound,
                        std::size_t member_cap = default_summit_cap) {
  detail::require_same_ctx(u.ctx(), v.ctx());
  if (degrees(u) != degrees(v)) return false;
  SummitSet su = summit_set(oracle, u, strand_bound, member_cap);
  SummitSet sv = summit_set(oracle, v, strand_bound, member_cap);
  return su == sv;
}

} // namespace sbm

#endif
