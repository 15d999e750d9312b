#ifndef SBM_WORD_HPP
#define SBM_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sbm/errors.hpp"

namespace sbm {

/// Ambient strand count; every word lives over one of these.
struct Context {
  int n;

  explicit Context(int strands) : n(strands) {
    if (n < 2) throw ParseError("strand count must be at least 2, got " + std::to_string(n));
  }

  friend bool operator==(const Context&, const Context&) = default;
};

enum class LetterKind : unsigned char { sigma, sigma_inv, x };

/// One generator occurrence: sigma_i, sigma_i^{-1} or x_i with 1 <= i <= n-1.
struct Letter {
  LetterKind kind;
  int index;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter sigma(int i) { return {LetterKind::sigma, i}; }
inline Letter sigma_inv(int i) { return {LetterKind::sigma_inv, i}; }
inline Letter singular(int i) { return {LetterKind::x, i}; }

/// Word over the alphabet {sigma_i, sigma_i^{-1}, x_i}. The empty word is the identity.
class Word {
public:
  Word(Context ctx, std::vector<Letter> letters) : ctx_(ctx), letters_(std::move(letters)) {
    for (const Letter& l : letters_)
      if (l.index < 1 || l.index > ctx_.n - 1)
        throw ParseError("letter index " + std::to_string(l.index) + " out of range [1, " +
                         std::to_string(ctx_.n - 1) + "]");
  }

  explicit Word(Context ctx) : ctx_(ctx) {}

  const Context& ctx() const { return ctx_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

private:
  Context ctx_;
  std::vector<Letter> letters_;
};

/// Inverse-free word; the domain of the positive-equivalence oracle.
class PositiveWord {
public:
  explicit PositiveWord(Word w) : w_(std::move(w)) {
    for (const Letter& l : w_.letters())
      if (l.kind == LetterKind::sigma_inv)
        throw ParseError("positive word may not contain inverse letters");
  }

  explicit PositiveWord(Context ctx) : w_(ctx) {}

  const Word& word() const { return w_; }
  operator const Word&() const { return w_; }
  const Context& ctx() const { return w_.ctx(); }
  const std::vector<Letter>& letters() const { return w_.letters(); }
  std::size_t size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;

private:
  Word w_;
};

/// Values of the three degree homomorphisms.
struct Degrees {
  int sigma = 0; // deg_sigma: sigma count minus sigma^{-1} count
  int x = 0;     // deg_x: x count, never negative
  int total = 0; // deg = deg_sigma + deg_x

  friend bool operator==(const Degrees&, const Degrees&) = default;
};

inline Degrees degrees(const Word& w) {
  Degrees d;
  for (const Letter& l : w.letters()) {
    switch (l.kind) {
      case LetterKind::sigma: ++d.sigma; break;
      case LetterKind::sigma_inv: --d.sigma; break;
      case LetterKind::x: ++d.x; break;
    }
  }
  d.total = d.sigma + d.x;
  return d;
}

inline Degrees degrees(const PositiveWord& w) { return degrees(w.word()); }

namespace detail {

inline void require_same_ctx(const Context& a, const Context& b) {
  if (!(a == b))
    throw ContextMismatch("operands live over different strand counts: " + std::to_string(a.n) +
                          " vs " + std::to_string(b.n));
}

} // namespace detail

inline Word concat(const Word& a, const Word& b) {
  detail::require_same_ctx(a.ctx(), b.ctx());
  std::vector<Letter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return Word(a.ctx(), std::move(ls));
}

inline PositiveWord concat(const PositiveWord& a, const PositiveWord& b) {
  return PositiveWord(concat(a.word(), b.word()));
}

/// Token grammar: `s<k>` = sigma_k, `s<k>-` = sigma_k^{-1}, `x<k>` = x_k,
/// whitespace separated. The empty string parses to the identity.
inline Word parse(std::string_view text, int n) {
  Context ctx(n);
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;

    char head = tok[0];
    if (head != 's' && head != 'x') throw ParseError("bad token '" + std::string(tok) + "'");
    bool inv = tok.size() > 1 && tok.back() == '-';
    std::string_view digits = tok.substr(1, tok.size() - 1 - (inv ? 1 : 0));
    if (digits.empty()) throw ParseError("bad token '" + std::string(tok) + "'");
    int k = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("bad token '" + std::string(tok) + "'");
      k = k * 10 + (c - '0');
      if (k > 1'000'000) throw ParseError("bad token '" + std::string(tok) + "'");
    }
    if (head == 'x' && inv) throw ParseError("x letters are not invertible: '" + std::string(tok) + "'");
    if (k < 1 || k > n - 1)
      throw ParseError("index " + std::to_string(k) + " out of range [1, " + std::to_string(n - 1) +
                       "] in token '" + std::string(tok) + "'");
    letters.push_back(head == 'x' ? singular(k) : (inv ? sigma_inv(k) : sigma(k)));
  }
  return Word(ctx, std::move(letters));
}

inline PositiveWord parse_positive(std::string_view text, int n) {
  return PositiveWord(parse(text, n));
}

inline std::string format(const Word& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (l.kind == LetterKind::x) ? 'x' : 's';
    out += std::to_string(l.index);
    if (l.kind == LetterKind::sigma_inv) out += '-';
  }
  return out;
}

inline std::string format(const PositiveWord& w) { return format(w.word()); }

/// The reflection automorphism R: index i -> n-i, kind preserved. An involution.
inline Word reflect(const Word& w) {
  std::vector<Letter> ls = w.letters();
  for (Letter& l : ls) l.index = w.ctx().n - l.index;
  return Word(w.ctx(), std::move(ls));
}

inline PositiveWord reflect(const PositiveWord& w) { return PositiveWord(reflect(w.word())); }

/// Free-group inverse; defined only for braid-only words (deg_x = 0).
inline Word invert(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (it->kind == LetterKind::x)
      throw NonInvertible("word contains x" + std::to_string(it->index) +
                          "; units have deg_x = 0");
    ls.push_back({it->kind == LetterKind::sigma ? LetterKind::sigma_inv : LetterKind::sigma,
                  it->index});
  }
  return Word(w.ctx(), std::move(ls));
}

namespace detail {

// Packed byte encoding of positive words: sigma_i -> i, x_i -> 0x80|i.
// Byte order equals the lexicographic order sigma_1 < ... < sigma_{n-1} < x_1 < ... < x_{n-1},
// so std::string comparison is word comparison.
using PLetter = unsigned char;
using PWord = std::string;

constexpr PLetter x_bit = 0x80;

inline PLetter psig(int i) { return static_cast<PLetter>(i); }
inline PLetter px(int i) { return static_cast<PLetter>(x_bit | i); }
inline bool pis_x(PLetter a) { return (a & x_bit) != 0; }
inline int pidx(PLetter a) { return a & 0x7f; }

inline PWord pack(const PositiveWord& w) {
  PWord out;
  out.reserve(w.size());
  for (const Letter& l : w.letters())
    out.push_back(static_cast<char>(l.kind == LetterKind::x ? px(l.index) : psig(l.index)));
  return out;
}

inline PositiveWord unpack(const PWord& p, Context ctx) {
  std::vector<Letter> ls;
  ls.reserve(p.size());
  for (char c : p) {
    PLetter a = static_cast<PLetter>(c);
    ls.push_back(pis_x(a) ? singular(pidx(a)) : sigma(pidx(a)));
  }
  return PositiveWord(Word(ctx, std::move(ls)));
}

inline int psigma_count(std::string_view p) {
  int c = 0;
  for (char ch : p)
    if (!pis_x(static_cast<PLetter>(ch))) ++c;
  return c;
}

inline int px_count(std::string_view p) { return static_cast<int>(p.size()) - psigma_count(p); }

// Image in the symmetric group (both sigma_i and x_i act as the transposition of
// positions i, i+1); invariant under all positive relations.
inline std::vector<unsigned char> permutation_of(std::string_view p, int n) {
  std::vector<unsigned char> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<unsigned char>(i);
  for (char ch : p) {
    int i = pidx(static_cast<PLetter>(ch));
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
  }
  return perm;
}

} // namespace detail

/// Letterwise lexicographic order with sigma_1 < ... < sigma_{n-1} < x_1 < ... < x_{n-1};
/// a proper prefix precedes.
inline std::strong_ordering lex_compare(const PositiveWord& a, const PositiveWord& b) {
  detail::require_same_ctx(a.ctx(), b.ctx());
  return detail::pack(a).compare(detail::pack(b)) <=> 0;
}

} // namespace sbm

#endif
