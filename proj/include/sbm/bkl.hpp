#ifndef SBM_BKL_HPP
#define SBM_BKL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sbm/garside.hpp"
#include "sbm/rewrite.hpp"
#include "sbm/word.hpp"

namespace sbm {

enum class BandKind : unsigned char { a_pos, a_neg, b };

/// Band generator a_ts, a_ts^{-1} or b_ts with 1 <= s < t <= n.
struct BandLetter {
  BandKind kind;
  int t;
  int s;

  friend bool operator==(const BandLetter&, const BandLetter&) = default;
};

inline BandLetter band_a(int t, int s) { return {BandKind::a_pos, t, s}; }
inline BandLetter band_a_inv(int t, int s) { return {BandKind::a_neg, t, s}; }
inline BandLetter band_b(int t, int s) { return {BandKind::b, t, s}; }

class BandWord {
public:
  BandWord(Context ctx, std::vector<BandLetter> letters)
      : ctx_(ctx), letters_(std::move(letters)) {
    for (const BandLetter& l : letters_)
      if (l.s < 1 || l.s >= l.t || l.t > ctx_.n)
        throw ParseError("band indices (" + std::to_string(l.t) + "," + std::to_string(l.s) +
                         ") violate 1 <= s < t <= " + std::to_string(ctx_.n));
  }

  explicit BandWord(Context ctx) : ctx_(ctx) {}

  const Context& ctx() const { return ctx_; }
  const std::vector<BandLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BandWord&, const BandWord&) = default;

private:
  Context ctx_;
  std::vector<BandLetter> letters_;
};

inline BandWord concat(const BandWord& a, const BandWord& b) {
  detail::require_same_ctx(a.ctx(), b.ctx());
  std::vector<BandLetter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return BandWord(a.ctx(), std::move(ls));
}

/// Band token grammar: `a[t,s]`, `a[t,s]-`, `b[q,p]`, whitespace separated.
inline BandWord parse_band(std::string_view text, int n) {
  Context ctx(n);
  std::vector<BandLetter> letters;
  std::size_t i = 0;
  auto fail = [](std::string_view tok) -> int {
    throw ParseError("bad band token '" + std::string(tok) + "'");
  };
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;

    char head = tok[0];
    if ((head != 'a' && head != 'b') || tok.size() < 6 || tok[1] != '[') fail(tok);
    bool inv = tok.back() == '-';
    std::string_view body = tok.substr(2, tok.size() - 3 - (inv ? 1 : 0));
    if (inv && tok[tok.size() - 2] != ']') fail(tok);
    if (!inv && tok.back() != ']') fail(tok);
    if (inv && head == 'b') throw ParseError("b letters are not invertible: '" + std::string(tok) + "'");
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) fail(tok);
    auto num = [&](std::string_view digits) {
      if (digits.empty()) fail(tok);
      int k = 0;
      for (char c : digits) {
        if (c < '0' || c > '9') fail(tok);
        k = k * 10 + (c - '0');
        if (k > 1'000'000) fail(tok);
      }
      return k;
    };
    int t = num(body.substr(0, comma));
    int s = num(body.substr(comma + 1));
    if (s < 1 || s >= t || t > n)
      throw ParseError("band indices (" + std::to_string(t) + "," + std::to_string(s) +
                       ") out of range in '" + std::string(tok) + "'");
    letters.push_back(head == 'b' ? band_b(t, s) : (inv ? band_a_inv(t, s) : band_a(t, s)));
  }
  return BandWord(ctx, std::move(letters));
}

inline std::string format_band(const BandWord& w) {
  std::string out;
  for (const BandLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (l.kind == BandKind::b) ? 'b' : 'a';
    out += '[';
    out += std::to_string(l.t);
    out += ',';
    out += std::to_string(l.s);
    out += ']';
    if (l.kind == BandKind::a_neg) out += '-';
  }
  return out;
}

/// Letterwise substitution into the Artin alphabet:
/// a_ts -> sigma_{t-1}..sigma_{s+1} sigma_s sigma_{s+1}^{-1}..sigma_{t-1}^{-1},
/// a_ts^{-1} the same with sigma_s^{-1}, b_qp the same with x_p in the middle.
inline Word artin_of(const BandWord& bw) {
  std::vector<Letter> out;
  for (const BandLetter& l : bw.letters()) {
    for (int k = l.t - 1; k > l.s; --k) out.push_back(sigma(k));
    switch (l.kind) {
      case BandKind::a_pos: out.push_back(sigma(l.s)); break;
      case BandKind::a_neg: out.push_back(sigma_inv(l.s)); break;
      case BandKind::b: out.push_back(singular(l.s)); break;
    }
    for (int k = l.s + 1; k < l.t; ++k) out.push_back(sigma_inv(k));
  }
  return Word(bw.ctx(), std::move(out));
}

/// Letterwise section of artin_of: sigma_i -> a_{(i+1)i}, x_i -> b_{(i+1)i}.
inline BandWord band_of_artin(const Word& w) {
  std::vector<BandLetter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) {
    switch (l.kind) {
      case LetterKind::sigma: out.push_back(band_a(l.index + 1, l.index)); break;
      case LetterKind::sigma_inv: out.push_back(band_a_inv(l.index + 1, l.index)); break;
      case LetterKind::x: out.push_back(band_b(l.index + 1, l.index)); break;
    }
  }
  return BandWord(w.ctx(), std::move(out));
}

/// The band fundamental word delta = a_{n(n-1)} a_{(n-1)(n-2)} ... a_{21}.
inline BandWord delta_band(int n) {
  Context ctx(n);
  std::vector<BandLetter> ls;
  ls.reserve(static_cast<std::size_t>(n - 1));
  for (int t = n; t >= 2; --t) ls.push_back(band_a(t, t - 1));
  return BandWord(ctx, std::move(ls));
}

/// Spelling of delta that begins with a_ts:
/// a_ts a_{n(n-1)} .. a_{(t+1)s} a_{t(t-1)} .. a_{(s+2)(s+1)} a_{s(s-1)} .. a_{21}
/// (for t = n the a_{(t+1)s} term disappears and the runs join).
inline BandWord delta_left_factor(int t, int s, int n) {
  Context ctx(n);
  if (s < 1 || s >= t || t > n) throw ParseError("band indices out of range");
  std::vector<BandLetter> ls;
  ls.push_back(band_a(t, s));
  for (int k = n; k >= t + 2; --k) ls.push_back(band_a(k, k - 1));
  if (t < n) ls.push_back(band_a(t + 1, s));
  for (int k = t; k >= s + 2; --k) ls.push_back(band_a(k, k - 1));
  for (int k = s; k >= 2; --k) ls.push_back(band_a(k, k - 1));
  return BandWord(ctx, std::move(ls));
}

/// Index shift realized by commuting a band letter past delta:
/// (t,s) -> (t+1, s+1) for t < n, and (n,s) -> (s+1, 1); kind preserved.
inline BandLetter band_delta_commute(const BandLetter& l, int n) {
  if (l.s < 1 || l.s >= l.t || l.t > n) throw ParseError("band indices out of range");
  if (l.t < n) return {l.kind, l.t + 1, l.s + 1};
  return {l.kind, l.s + 1, 1};
}

/// Band words are equal iff their Artin images are.
inline bool band_equal(Oracle& oracle, const BandWord& u, const BandWord& v) {
  detail::require_same_ctx(u.ctx(), v.ctx());
  return equal(oracle, artin_of(u), artin_of(v));
}

struct RelationFamilyReport {
  std::string name;
  int instances = 0;
  std::vector<std::string> failures;
};

struct PresentationReport {
  int n;
  std::vector<RelationFamilyReport> families;

  bool passed() const {
    for (const auto& f : families)
      if (!f.failures.empty()) return false;
    return true;
  }

  int total_instances() const {
    int c = 0;
    for (const auto& f : families) c += f.instances;
    return c;
  }
};

inline constexpr int default_presentation_bound = 5;

/// Checks every instance of every band relation family (and of the derived
/// relations that eliminate the Artin generators) against the word-problem
/// decider. Soundness only: each relation must hold in SB_n.
inline PresentationReport verify_presentation(Oracle& oracle, int n,
                                              int bound = default_presentation_bound) {
  Context ctx(n);
  if (n > bound)
    throw BoundExceeded("strand count " + std::to_string(n) + " above bound " +
                        std::to_string(bound) + " for presentation verification");

  PresentationReport report{n, {}};
  RelationFamilyReport* fam = nullptr;
  auto family = [&](std::string name) {
    report.families.push_back({std::move(name), 0, {}});
    fam = &report.families.back();
  };
  auto check = [&](const BandWord& lhs, const BandWord& rhs, const std::string& label) {
    ++fam->instances;
    if (!band_equal(oracle, lhs, rhs)) fam->failures.push_back(label);
  };
  auto bw = [&](std::vector<BandLetter> ls) { return BandWord(ctx, std::move(ls)); };
  auto lbl = [](std::string_view fmt, const BandLetter& p, const BandLetter& q) {
    return std::string(fmt) + " @ (" + std::to_string(p.t) + "," + std::to_string(p.s) + ")(" +
           std::to_string(q.t) + "," + std::to_string(q.s) + ")";
  };

  std::vector<std::pair<int, int>> pairs; // all (t,s) with s < t
  for (int t = 2; t <= n; ++t)
    for (int s = 1; s < t; ++s) pairs.emplace_back(t, s);

  auto disjoint_commuting = [](int t, int s, int r, int q) {
    long prod = static_cast<long>(t - r) * (t - q) * (s - r) * (s - q);
    return prod > 0;
  };

  family("aa_commute");
  for (auto [t, s] : pairs)
    for (auto [r, q] : pairs)
      if (disjoint_commuting(t, s, r, q))
        check(bw({band_a(t, s), band_a(r, q)}), bw({band_a(r, q), band_a(t, s)}),
              lbl("a a", band_a(t, s), band_a(r, q)));

  family("aa_triple");
  for (int t = 3; t <= n; ++t)
    for (int s = 2; s < t; ++s)
      for (int r = 1; r < s; ++r) {
        check(bw({band_a(t, s), band_a(s, r)}), bw({band_a(t, r), band_a(t, s)}),
              lbl("a_ts a_sr = a_tr a_ts", band_a(t, s), band_a(s, r)));
        check(bw({band_a(t, r), band_a(t, s)}), bw({band_a(s, r), band_a(t, r)}),
              lbl("a_tr a_ts = a_sr a_tr", band_a(t, r), band_a(t, s)));
      }

  family("a_inverse");
  for (auto [t, s] : pairs) {
    check(bw({band_a(t, s), band_a_inv(t, s)}), bw({}), lbl("a a^-1", band_a(t, s), band_a(t, s)));
    check(bw({band_a_inv(t, s), band_a(t, s)}), bw({}), lbl("a^-1 a", band_a(t, s), band_a(t, s)));
  }

  family("ab_commute");
  for (auto [t, s] : pairs)
    for (auto [r, q] : pairs)
      if (disjoint_commuting(t, s, r, q))
        check(bw({band_a(t, s), band_b(r, q)}), bw({band_b(r, q), band_a(t, s)}),
              lbl("a b", band_a(t, s), band_b(r, q)));

  family("ab_same");
  for (auto [t, s] : pairs)
    check(bw({band_a(t, s), band_b(t, s)}), bw({band_b(t, s), band_a(t, s)}),
          lbl("a_ts b_ts", band_a(t, s), band_b(t, s)));

  family("ab_slide_high");
  for (int t = 3; t <= n; ++t)
    for (int s = 2; s < t; ++s)
      for (int r = 1; r < s; ++r)
        check(bw({band_a(t, s), band_b(s, r)}), bw({band_b(t, r), band_a(t, s)}),
              lbl("a_ts b_sr = b_tr a_ts", band_a(t, s), band_b(s, r)));

  family("ab_slide_low");
  for (int t = 3; t <= n; ++t)
    for (int s = 2; s < t; ++s)
      for (int r = 1; r < s; ++r)
        check(bw({band_a(s, r), band_b(t, r)}), bw({band_b(t, s), band_a(s, r)}),
              lbl("a_sr b_tr = b_ts a_sr", band_a(s, r), band_b(t, r)));

  family("ab_slide_outer");
  for (int t = 3; t <= n; ++t)
    for (int s = 2; s < t; ++s)
      for (int r = 1; r < s; ++r)
        check(bw({band_a(t, r), band_b(t, s)}), bw({band_b(s, r), band_a(t, r)}),
              lbl("a_tr b_ts = b_sr a_tr", band_a(t, r), band_b(t, s)));

  family("bb_commute");
  for (auto [t, s] : pairs)
    for (auto [r, q] : pairs)
      if (disjoint_commuting(t, s, r, q))
        check(bw({band_b(t, s), band_b(r, q)}), bw({band_b(r, q), band_b(t, s)}),
              lbl("b b", band_b(t, s), band_b(r, q)));

  // Derived relations: the presentation after eliminating sigma_i = a_{(i+1)i},
  // x_i = b_{(i+1)i}.

  family("gen_a_far_commute");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (j - i > 1 || i - j > 1)
        check(bw({band_a(i + 1, i), band_a(j + 1, j)}), bw({band_a(j + 1, j), band_a(i + 1, i)}),
              lbl("gen a far", band_a(i + 1, i), band_a(j + 1, j)));

  family("gen_a_braid");
  for (int i = 1; i + 1 < n; ++i)
    check(bw({band_a(i + 1, i), band_a(i + 2, i + 1), band_a(i + 1, i)}),
          bw({band_a(i + 2, i + 1), band_a(i + 1, i), band_a(i + 2, i + 1)}),
          lbl("gen a braid", band_a(i + 1, i), band_a(i + 2, i + 1)));

  auto descending_chain = [&](int hi, int lo) { // a_{hi(hi-1)} ... a_{(lo+1)lo}
    std::vector<BandLetter> ls;
    for (int k = hi; k > lo; --k) ls.push_back(band_a(k, k - 1));
    return ls;
  };
  auto ascending_inv_chain = [&](int lo, int hi) { // a^-1_{(lo+1)lo} ... a^-1_{hi(hi-1)}
    std::vector<BandLetter> ls;
    for (int k = lo; k < hi; ++k) ls.push_back(band_a_inv(k + 1, k));
    return ls;
  };

  family("band_a_expansion");
  for (auto [t, s] : pairs) {
    std::vector<BandLetter> rhs = descending_chain(t, s + 1);
    rhs.push_back(band_a(s + 1, s));
    auto tail = ascending_inv_chain(s + 1, t);
    rhs.insert(rhs.end(), tail.begin(), tail.end());
    check(bw({band_a(t, s)}), bw(std::move(rhs)), lbl("a_ts expansion", band_a(t, s), band_a(t, s)));
  }

  family("band_a_inv_expansion");
  for (auto [t, s] : pairs) {
    std::vector<BandLetter> rhs = descending_chain(t, s + 1);
    rhs.push_back(band_a_inv(s + 1, s));
    auto tail = ascending_inv_chain(s + 1, t);
    rhs.insert(rhs.end(), tail.begin(), tail.end());
    check(bw({band_a_inv(t, s)}), bw(std::move(rhs)),
          lbl("a_ts^-1 expansion", band_a(t, s), band_a(t, s)));
  }

  family("gen_b_far_commute");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (j - i > 1 || i - j > 1)
        check(bw({band_b(i + 1, i), band_b(j + 1, j)}), bw({band_b(j + 1, j), band_b(i + 1, i)}),
              lbl("gen b far", band_b(i + 1, i), band_b(j + 1, j)));

  family("gen_ab_commute");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i - j != 1 && j - i != 1)
        check(bw({band_b(i + 1, i), band_a(j + 1, j)}), bw({band_a(j + 1, j), band_b(i + 1, i)}),
              lbl("gen b a", band_b(i + 1, i), band_a(j + 1, j)));

  family("gen_ab_braid_1");
  for (int i = 1; i + 1 < n; ++i)
    check(bw({band_a(i + 1, i), band_a(i + 2, i + 1), band_b(i + 1, i)}),
          bw({band_b(i + 2, i + 1), band_a(i + 1, i), band_a(i + 2, i + 1)}),
          lbl("gen ab braid 1", band_a(i + 1, i), band_b(i + 1, i)));

  family("gen_ab_braid_2");
  for (int i = 1; i + 1 < n; ++i)
    check(bw({band_a(i + 2, i + 1), band_a(i + 1, i), band_b(i + 2, i + 1)}),
          bw({band_b(i + 1, i), band_a(i + 2, i + 1), band_a(i + 1, i)}),
          lbl("gen ab braid 2", band_a(i + 2, i + 1), band_b(i + 2, i + 1)));

  family("band_b_expansion");
  for (auto [q, p] : pairs) {
    std::vector<BandLetter> rhs = descending_chain(q, p + 1);
    rhs.push_back(band_b(p + 1, p));
    auto tail = ascending_inv_chain(p + 1, q);
    rhs.insert(rhs.end(), tail.begin(), tail.end());
    check(bw({band_b(q, p)}), bw(std::move(rhs)), lbl("b_qp expansion", band_b(q, p), band_b(q, p)));
  }

  return report;
}

} // namespace sbm

#endif
