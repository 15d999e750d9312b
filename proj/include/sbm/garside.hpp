#ifndef SBM_GARSIDE_HPP
#define SBM_GARSIDE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sbm/rewrite.hpp"
#include "sbm/word.hpp"

namespace sbm {

/// Garside normal form Delta^m * base; the base is the lex-minimal positive
/// word of its class and is prime to Delta.
struct NormalForm {
  int power;
  PositiveWord base;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

enum class Side { left, right };

/// One block of a greedy form: maximal permutation-braid fragments followed by
/// the x letters extracted before the next nonempty braid divisor appears.
/// For Side::right the roles are mirrored (x block first, then fragments).
struct GreedyBlock {
  std::vector<PositiveWord> fragments;
  std::vector<int> xs;

  friend bool operator==(const GreedyBlock&, const GreedyBlock&) = default;
};

struct GreedyForm {
  Context ctx;
  Side side;
  int power;
  std::vector<GreedyBlock> blocks;

  friend bool operator==(const GreedyForm&, const GreedyForm&) = default;
};

/// The fundamental word Delta = Pi_{n-1} ... Pi_1 with Pi_t = sigma_1 ... sigma_t.
inline PositiveWord delta(int n) {
  Context ctx(n);
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int t = n - 1; t >= 1; --t)
    for (int i = 1; i <= t; ++i) ls.push_back(sigma(i));
  return PositiveWord(Word(ctx, std::move(ls)));
}

namespace detail {

inline PWord pdelta(int n) {
  PWord out;
  for (int t = n - 1; t >= 1; --t)
    for (int i = 1; i <= t; ++i) out.push_back(static_cast<char>(psig(i)));
  return out;
}

inline void preflect(PWord& w, int n) {
  for (char& c : w) {
    PLetter a = static_cast<PLetter>(c);
    c = static_cast<char>(pis_x(a) ? px(n - pidx(a)) : psig(n - pidx(a)));
  }
}

// D with sigma_i * D = Delta, found as the suffix of a Delta-class member that
// starts with sigma_i. Cached per (n, i) inside the oracle's class cache.
inline PWord pcomplement_right(Oracle& oracle, int i, int n) {
  PWord d = pdelta(n);
  auto q = oracle.pdivide_left(d, PWord(1, static_cast<char>(psig(i))), Context(n));
  return *q; // Delta is divisible by every sigma_i
}

inline bool pall_sigma_divide(Oracle& oracle, const PWord& w, Context ctx) {
  for (int i = 1; i < ctx.n; ++i)
    if (!oracle.pdivide_left(w, PWord(1, static_cast<char>(psig(i))), ctx)) return false;
  return true;
}

// One attempt to strip a leading Delta by peeling letterwise along the
// canonical spelling. Left cancellativity makes a definitive failure at any
// step a proof that Delta does not divide w: if w = Delta Z then every prefix
// letter of Delta must divide the corresponding quotient. A cheap bounded
// sigma_i divisibility pre-test rejects most non-multiples first.
inline SearchOutcome ptry_peel_delta(Oracle& oracle, PWord& w, Context ctx, std::size_t budget) {
  const int dlen = ctx.n * (ctx.n - 1) / 2;
  if (psigma_count(w) < dlen) return SearchOutcome::exhausted;
  for (int i = 1; i < ctx.n; ++i) {
    auto oc =
        oracle.pdivide_left_bounded(w, PWord(1, static_cast<char>(psig(i))), ctx, 5'000, nullptr);
    if (oc == SearchOutcome::exhausted) return SearchOutcome::exhausted;
  }
  PWord rest = w;
  for (char c : pdelta(ctx.n)) {
    PWord witness;
    auto oc = oracle.find_initial(rest, static_cast<PLetter>(c), ctx, budget, &witness);
    if (oc != SearchOutcome::found) return oc;
    rest = witness.substr(1);
  }
  w = std::move(rest);
  return SearchOutcome::found;
}

// Rewrites an arbitrary word as Delta^m * P with P positive: free-reduces,
// replaces sigma_i^{-1} by complement * Delta^{-1} and pushes every Delta^{-1}
// to the front with the reflection rule. With `eager_peel`, full Delta factors
// are stripped off P whenever a bounded divisibility probe confirms them,
// keeping P short; P is not guaranteed prime to Delta either way.
inline std::pair<int, PWord> preduce(Oracle& oracle, const Word& w, bool eager_peel) {
  const int n = w.ctx().n;
  const Context ctx = w.ctx();
  const int dlen = n * (n - 1) / 2;
  constexpr std::size_t peel_budget = 50'000;

  std::vector<Letter> reduced;
  for (const Letter& l : w.letters()) {
    if (!reduced.empty() && l.index == reduced.back().index &&
        ((l.kind == LetterKind::sigma && reduced.back().kind == LetterKind::sigma_inv) ||
         (l.kind == LetterKind::sigma_inv && reduced.back().kind == LetterKind::sigma))) {
      reduced.pop_back();
    } else {
      reduced.push_back(l);
    }
  }

  int m = 0;
  PWord p;
  int sigmas = 0;
  auto peel_known = [&] {
    while (sigmas >= dlen && ptry_peel_delta(oracle, p, ctx, peel_budget) == SearchOutcome::found) {
      sigmas -= dlen;
      ++m;
    }
  };
  for (const Letter& l : reduced) {
    switch (l.kind) {
      case LetterKind::sigma:
        p.push_back(static_cast<char>(psig(l.index)));
        ++sigmas;
        break;
      case LetterKind::x:
        p.push_back(static_cast<char>(px(l.index)));
        break;
      case LetterKind::sigma_inv:
        p.append(pcomplement_right(oracle, l.index, n));
        sigmas += dlen - 1;
        preflect(p, n);
        --m;
        if (eager_peel) peel_known();
        break;
    }
  }
  if (eager_peel) peel_known();
  return {m, std::move(p)};
}

// Definitive maximal-Delta split of a positive packed word.
inline std::pair<int, PWord> pdelta_split(Oracle& oracle, PWord p, Context ctx) {
  int t = 0;
  for (;;) {
    auto oc = ptry_peel_delta(oracle, p, ctx, oracle.member_cap());
    if (oc == SearchOutcome::budget) throw CapExceeded(oracle.member_cap(), ctx, nullptr);
    if (oc != SearchOutcome::found) break;
    ++t;
  }
  return {t, std::move(p)};
}

} // namespace detail

/// D with sigma_i * D positively equal to Delta.
inline PositiveWord complement_right(Oracle& oracle, int i, int n) {
  Context ctx(n);
  if (i < 1 || i > n - 1) throw ParseError("generator index out of range");
  return detail::unpack(detail::pcomplement_right(oracle, i, n), ctx);
}

/// D with D * sigma_i positively equal to Delta (mirror via word reversal).
inline PositiveWord complement_left(Oracle& oracle, int i, int n) {
  Context ctx(n);
  if (i < 1 || i > n - 1) throw ParseError("generator index out of range");
  detail::PWord d = detail::pdelta(n);
  std::reverse(d.begin(), d.end());
  auto q = oracle.pdivide_left(d, detail::PWord(1, static_cast<char>(detail::psig(i))), ctx);
  detail::PWord out = *q;
  std::reverse(out.begin(), out.end());
  return detail::unpack(out, ctx);
}

/// The word g' with w * Delta = Delta * g'; equals reflect(w).
inline PositiveWord delta_commute_pos(const PositiveWord& w) { return reflect(w); }

/// Maximal t with Delta^t left-dividing w, and the quotient (prime to Delta).
/// Divisibility by Delta is pre-tested as divisibility by every sigma_i.
inline std::pair<int, PositiveWord> delta_power_split(Oracle& oracle, const PositiveWord& w) {
  auto [t, p] = detail::pdelta_split(oracle, detail::pack(w), w.ctx());
  return {t, detail::unpack(p, w.ctx())};
}

/// Garside left normal form Delta^m * base, unique per element.
inline NormalForm normal_form(Oracle& oracle, const Word& w) {
  auto [m, p] = detail::preduce(oracle, w, true);
  auto [t, tail] = detail::pdelta_split(oracle, std::move(p), w.ctx());
  auto cls = oracle.class_of(tail, w.ctx(), oracle.member_cap());
  return {m + t, detail::unpack(cls->front(), w.ctx())};
}

/// Word problem for SB_n. Decides normal-form identity by reducing both sides
/// to Delta^k * positive; the side with the higher power must shed the excess
/// Delta factors from its positive part, then the residues are compared.
inline bool equal(Oracle& oracle, const Word& u, const Word& v) {
  detail::require_same_ctx(u.ctx(), v.ctx());
  const Context ctx = u.ctx();
  Degrees du = degrees(u), dv = degrees(v);
  if (du != dv) return false;
  auto [ku, pu] = detail::preduce(oracle, u, true);
  auto [kv, pv] = detail::preduce(oracle, v, true);
  // u = Delta^ku pu = Delta^kv pv = v requires Delta^|ku-kv| to divide the
  // lower-power side's positive part.
  detail::PWord* longer = ku > kv ? &pv : &pu;
  for (int k = 0; k < (ku > kv ? ku - kv : kv - ku); ++k) {
    auto oc = detail::ptry_peel_delta(oracle, *longer, ctx, oracle.member_cap());
    if (oc == detail::SearchOutcome::budget) throw CapExceeded(oracle.member_cap(), ctx, nullptr);
    if (oc != detail::SearchOutcome::found) return false;
  }
  return oracle.pequal(pu, pv, ctx);
}

/// True iff no pair of strands crosses twice while tracing w; equivalently,
/// w left-divides Delta.
inline bool is_permutation_braid(const PositiveWord& w) {
  const int n = w.ctx().n;
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
  std::vector<bool> crossed(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
  for (const Letter& l : w.letters()) {
    if (l.kind == LetterKind::x)
      throw XLettersPresent("permutation-braid test requires deg_x = 0");
    int a = pos[static_cast<std::size_t>(l.index - 1)];
    int b = pos[static_cast<std::size_t>(l.index)];
    if (a > b) std::swap(a, b);
    std::size_t key = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(b);
    if (crossed[key]) return false;
    crossed[key] = true;
    std::swap(pos[static_cast<std::size_t>(l.index - 1)], pos[static_cast<std::size_t>(l.index)]);
  }
  return true;
}

namespace detail {

inline bool pis_permutation_braid(const PWord& p, Context ctx) {
  return is_permutation_braid(unpack(p, ctx));
}

// Left-greedy factorization of a braid word into maximal permutation-braid
// fragments: grow each fragment with the smallest sigma_i that keeps it a
// divisor of Delta and of the remaining word. Fragments come back in the
// lex-minimal spelling of their class.
inline std::vector<PWord> pfragment_left(Oracle& oracle, PWord s, Context ctx) {
  std::vector<PWord> frags;
  while (!s.empty()) {
    PWord frag;
    PWord rest = s;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 1; i < ctx.n; ++i) {
        PWord cand = frag;
        cand.push_back(static_cast<char>(psig(i)));
        if (!pis_permutation_braid(cand, ctx)) continue;
        if (auto q = oracle.pdivide_left(rest, PWord(1, static_cast<char>(psig(i))), ctx)) {
          frag = std::move(cand);
          rest = std::move(*q);
          grew = true;
          break;
        }
      }
    }
    frags.push_back(oracle.class_of(frag, ctx, oracle.member_cap())->front());
    s = std::move(rest);
  }
  return frags;
}

inline bool pany_sigma_divides(Oracle& oracle, const PWord& w, Context ctx) {
  for (int i = 1; i < ctx.n; ++i)
    if (oracle.pdivide_left(w, PWord(1, static_cast<char>(psig(i))), ctx)) return true;
  return false;
}

// Left-greedy block extraction of a positive word prime to Delta.
inline std::vector<GreedyBlock> pgreedy_blocks(Oracle& oracle, PWord rest, Context ctx) {
  std::vector<GreedyBlock> blocks;
  while (!rest.empty()) {
    GreedyBlock block;
    if (pany_sigma_divides(oracle, rest, ctx)) {
      PWord s_part;
      for (;;) {
        bool hit = false;
        for (int i = 1; i < ctx.n && !hit; ++i) {
          if (auto q = oracle.pdivide_left(rest, PWord(1, static_cast<char>(psig(i))), ctx)) {
            s_part.push_back(static_cast<char>(psig(i)));
            rest = std::move(*q);
            hit = true;
          }
        }
        if (!hit) break;
      }
      for (auto& f : pfragment_left(oracle, std::move(s_part), ctx))
        block.fragments.push_back(unpack(f, ctx));
    }
    while (!rest.empty() && !pany_sigma_divides(oracle, rest, ctx)) {
      // the first letter of any representative is a divisor, so an x divisor exists
      int smallest = 0;
      for (int i = 1; i < ctx.n && smallest == 0; ++i)
        if (oracle.pdivide_left(rest, PWord(1, static_cast<char>(px(i))), ctx)) smallest = i;
      auto q = oracle.pdivide_left(rest, PWord(1, static_cast<char>(px(smallest))), ctx);
      rest = std::move(*q);
      block.xs.push_back(smallest);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

} // namespace detail

/// Greedy form Delta^t S_1 X_1 ... S_k X_k (left) or its mirror image
/// X_1 S_1 ... X_k S_k Delta^t (right).
inline GreedyForm greedy_form(Oracle& oracle, const Word& w, Side side = Side::left) {
  const Context ctx = w.ctx();
  if (side == Side::left) {
    auto [m, p] = detail::preduce(oracle, w, true);
    auto [t, tail] = detail::pdelta_split(oracle, std::move(p), ctx);
    return {ctx, side, m + t, detail::pgreedy_blocks(oracle, std::move(tail), ctx)};
  }
  // right side: factor the reversed word and mirror the result
  std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
  auto [m0, p] = detail::preduce(oracle, Word(ctx, std::move(rev)), true);
  auto [t, tail] = detail::pdelta_split(oracle, std::move(p), ctx);
  const int m = m0 + t;
  auto blocks = detail::pgreedy_blocks(oracle, std::move(tail), ctx);
  std::reverse(blocks.begin(), blocks.end());
  for (GreedyBlock& b : blocks) {
    std::reverse(b.xs.begin(), b.xs.end());
    std::reverse(b.fragments.begin(), b.fragments.end());
    for (PositiveWord& f : b.fragments) {
      detail::PWord pf = detail::pack(f);
      std::reverse(pf.begin(), pf.end());
      f = detail::unpack(oracle.class_of(pf, ctx, oracle.member_cap())->front(), ctx);
    }
  }
  return {ctx, side, m, std::move(blocks)};
}

/// Spells Delta^m (inverted letterwise when m < 0) followed by the base.
inline Word reconstruct(const NormalForm& nf) {
  const Context ctx = nf.base.ctx();
  Word d = delta(ctx.n).word();
  Word out(ctx);
  if (nf.power >= 0) {
    for (int k = 0; k < nf.power; ++k) out = concat(out, d);
  } else {
    Word dinv = invert(d);
    for (int k = 0; k < -nf.power; ++k) out = concat(out, dinv);
  }
  return concat(out, nf.base.word());
}

/// Concatenation of the form's factors in reading order.
inline Word reconstruct(const GreedyForm& gf) {
  const Context ctx = gf.ctx;
  Word d = delta(ctx.n).word();
  Word dinv = gf.power < 0 ? invert(d) : Word(ctx);
  auto power_word = [&] {
    Word out(ctx);
    for (int k = 0; k < gf.power; ++k) out = concat(out, d);
    for (int k = 0; k < -gf.power; ++k) out = concat(out, dinv);
    return out;
  };
  auto block_word = [&](const GreedyBlock& b, bool xs_first) {
    Word out(ctx);
    Word xw(ctx);
    {
      std::vector<Letter> ls;
      for (int i : b.xs) ls.push_back(singular(i));
      xw = Word(ctx, std::move(ls));
    }
    if (xs_first) out = concat(out, xw);
    for (const PositiveWord& f : b.fragments) out = concat(out, f.word());
    if (!xs_first) out = concat(out, xw);
    return out;
  };
  Word out(ctx);
  if (gf.side == Side::left) {
    out = power_word();
    for (const GreedyBlock& b : gf.blocks) out = concat(out, block_word(b, false));
  } else {
    for (const GreedyBlock& b : gf.blocks) out = concat(out, block_word(b, true));
    out = concat(out, power_word());
  }
  return out;
}

} // namespace sbm

#endif
