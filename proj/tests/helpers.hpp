#ifndef SBM_TEST_HELPERS_HPP
#define SBM_TEST_HELPERS_HPP

// Test-side utilities. The elementary-move generator below re-encodes the
// defining relations independently of the library's rewriting engine so that
// respelling-based tests do not share code with the implementation they check.

#include <cstdint>
#include <vector>

#include "sbm/word.hpp"

namespace th {

struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::size_t below(std::size_t m) { return static_cast<std::size_t>(next() % m); }
};

using Letters = std::vector<sbm::Letter>;

inline bool is_sig(const sbm::Letter& l) { return l.kind == sbm::LetterKind::sigma; }
inline bool is_inv(const sbm::Letter& l) { return l.kind == sbm::LetterKind::sigma_inv; }
inline bool is_x(const sbm::Letter& l) { return l.kind == sbm::LetterKind::x; }

// All words reachable by one elementary move: a defining relation applied at
// one position, an insertion of c c^{-1} / c^{-1} c, or a deletion of such a
// pair. `allow_inserts` switches the group moves on.
inline std::vector<Letters> elementary_moves(const Letters& w, int n, bool allow_inserts,
                                             std::size_t max_len) {
  std::vector<Letters> out;
  auto push_swapped = [&](std::size_t p) {
    Letters v = w;
    std::swap(v[p], v[p + 1]);
    out.push_back(std::move(v));
  };
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const sbm::Letter a = w[p], b = w[p + 1];
    int gap = a.index > b.index ? a.index - b.index : b.index - a.index;
    if (is_sig(a) && is_sig(b) && gap > 1) push_swapped(p);
    if (is_x(a) && is_x(b) && gap > 1) push_swapped(p);
    if (((is_sig(a) && is_x(b)) || (is_x(a) && is_sig(b))) && gap != 1) push_swapped(p);
    if (p + 2 < w.size()) {
      const sbm::Letter c = w[p + 2];
      if (is_sig(a) && is_sig(b) && is_sig(c) && a.index == c.index && gap == 1) {
        Letters v = w;
        v[p] = b;
        v[p + 1] = a;
        v[p + 2] = b;
        out.push_back(std::move(v));
      }
      if (is_sig(a) && is_sig(b) && is_x(c) && gap == 1 && c.index == a.index) {
        Letters v = w; // sigma_i sigma_j x_i -> x_j sigma_i sigma_j, |i-j|=1
        v[p] = sbm::singular(b.index);
        v[p + 1] = a;
        v[p + 2] = b;
        out.push_back(std::move(v));
      }
      if (is_x(a) && is_sig(b) && is_sig(c) && a.index == c.index &&
          (b.index - c.index == 1 || c.index - b.index == 1)) {
        Letters v = w; // x_j sigma_i sigma_j -> sigma_i sigma_j x_i
        v[p] = b;
        v[p + 1] = c;
        v[p + 2] = sbm::singular(b.index);
        out.push_back(std::move(v));
      }
    }
    // deletion of an adjacent inverse pair
    if (a.index == b.index &&
        ((is_sig(a) && is_inv(b)) || (is_inv(a) && is_sig(b)))) {
      Letters v;
      v.reserve(w.size() - 2);
      v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(p));
      v.insert(v.end(), w.begin() + static_cast<long>(p) + 2, w.end());
      out.push_back(std::move(v));
    }
  }
  if (allow_inserts && w.size() + 2 <= max_len) {
    for (std::size_t p = 0; p <= w.size(); ++p)
      for (int i = 1; i < n; ++i)
        for (bool inv_first : {false, true}) {
          Letters v = w;
          auto at = v.begin() + static_cast<long>(p);
          if (inv_first) {
            at = v.insert(at, sbm::sigma_inv(i));
            v.insert(at + 1, sbm::sigma(i));
          } else {
            at = v.insert(at, sbm::sigma(i));
            v.insert(at + 1, sbm::sigma_inv(i));
          }
          out.push_back(std::move(v));
        }
  }
  return out;
}

/// Random walk over elementary moves; the result denotes the same element.
inline sbm::Word respell(Rng& rng, const sbm::Word& w, int steps) {
  Letters cur = w.letters();
  const int n = w.ctx().n;
  for (int s = 0; s < steps; ++s) {
    auto moves = elementary_moves(cur, n, true, w.size() + 12);
    if (moves.empty()) break;
    cur = moves[rng.below(moves.size())];
  }
  return sbm::Word(w.ctx(), cur);
}

/// Positive-relation-only walk; stays inside the positive equivalence class.
inline sbm::PositiveWord respell_positive(Rng& rng, const sbm::PositiveWord& w, int steps) {
  Letters cur = w.letters();
  const int n = w.ctx().n;
  for (int s = 0; s < steps; ++s) {
    auto moves = elementary_moves(cur, n, false, cur.size());
    if (moves.empty()) break;
    cur = moves[rng.below(moves.size())];
  }
  return sbm::PositiveWord(sbm::Word(w.ctx(), cur));
}

inline sbm::Word random_word(Rng& rng, int n, int len, bool allow_inv, bool allow_x) {
  Letters ls;
  for (int p = 0; p < len; ++p) {
    int idx = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(n - 1)));
    std::size_t kinds = 1 + (allow_inv ? 1 : 0) + (allow_x ? 1 : 0);
    std::size_t pick = rng.below(kinds);
    if (pick == 0)
      ls.push_back(sbm::sigma(idx));
    else if (pick == 1 && allow_inv)
      ls.push_back(sbm::sigma_inv(idx));
    else
      ls.push_back(sbm::singular(idx));
  }
  return sbm::Word(sbm::Context(n), std::move(ls));
}

inline sbm::PositiveWord random_positive(Rng& rng, int n, int len, bool allow_x = true) {
  return sbm::PositiveWord(random_word(rng, n, len, false, allow_x));
}

/// All positive words over n strands with length <= max_len, in generation order.
inline std::vector<sbm::PositiveWord> all_positive_words(int n, int max_len) {
  sbm::Context ctx(n);
  std::vector<sbm::Letter> alphabet;
  for (int i = 1; i < n; ++i) alphabet.push_back(sbm::sigma(i));
  for (int i = 1; i < n; ++i) alphabet.push_back(sbm::singular(i));
  std::vector<sbm::PositiveWord> out{sbm::PositiveWord(ctx)};
  std::vector<Letters> level{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Letters> next;
    for (const auto& w : level)
      for (const sbm::Letter& l : alphabet) {
        Letters ext = w;
        ext.push_back(l);
        out.push_back(sbm::PositiveWord(sbm::Word(ctx, ext)));
        next.push_back(std::move(ext));
      }
    level = std::move(next);
  }
  return out;
}

} // namespace th

#endif
