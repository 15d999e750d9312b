#ifndef SBM_SELFCHECK_HPP
#define SBM_SELFCHECK_HPP

#include <functional>
#include <string>
#include <vector>

#include "sbm/bkl.hpp"
#include "sbm/conjugacy.hpp"
#include "sbm/garside.hpp"
#include "sbm/rewrite.hpp"
#include "sbm/word.hpp"

namespace sbm {

struct SelfcheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

namespace detail {

inline std::vector<PositiveWord> all_positive_words(int n, int max_len) {
  Context ctx(n);
  std::vector<Letter> alphabet;
  for (int i = 1; i < n; ++i) alphabet.push_back(sigma(i));
  for (int i = 1; i < n; ++i) alphabet.push_back(singular(i));
  std::vector<PositiveWord> out{PositiveWord(ctx)};
  std::vector<std::vector<Letter>> level{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : level)
      for (const Letter& l : alphabet) {
        auto ext = w;
        ext.push_back(l);
        out.push_back(PositiveWord(Word(ctx, ext)));
        next.push_back(std::move(ext));
      }
    level = std::move(next);
  }
  return out;
}

} // namespace detail

/// Small exhaustive invariant suites, sized to finish in seconds. Exposed to
/// the CLI as `selfcheck`.
inline std::vector<SelfcheckResult> selfcheck() {
  std::vector<SelfcheckResult> results;
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    bool ok = true;
    try {
      detail = body();
      ok = detail.empty();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    results.push_back({name, ok, detail});
  };

  run("relation soundness n=3", [] {
    Oracle oracle;
    const int n = 3;
    auto chk = [&](const char* u, const char* v) {
      return equal(oracle, parse(u, n), parse(v, n));
    };
    if (!chk("s1 s2 s1", "s2 s1 s2")) return std::string("braid relation failed");
    if (!chk("s1 s2 x1", "x2 s1 s2")) return std::string("mixed relation 1 failed");
    if (!chk("s2 s1 x2", "x1 s2 s1")) return std::string("mixed relation 2 failed");
    if (!chk("x1 s1", "s1 x1")) return std::string("x/sigma same-index commutation failed");
    if (!chk("s1 s1-", "")) return std::string("free inverse failed");
    return std::string();
  });

  run("delta commutation n=2..4", [] {
    Oracle oracle;
    for (int n = 2; n <= 4; ++n) {
      PositiveWord d = delta(n);
      for (int i = 1; i < n; ++i) {
        for (Letter l : {sigma(i), singular(i)}) {
          PositiveWord g(Word(Context(n), {l}));
          if (!oracle.positively_equal(concat(g, d), concat(d, reflect(g))))
            return "g*Delta != Delta*R(g) at n=" + std::to_string(n) + " i=" + std::to_string(i);
        }
      }
    }
    return std::string();
  });

  run("delta divisibility via all sigma, n=3 len<=4", [] {
    Oracle oracle;
    PositiveWord d = delta(3);
    for (const PositiveWord& w : detail::all_positive_words(3, 4)) {
      bool all = true;
      for (int i = 1; i < 3; ++i)
        if (!oracle.left_divide(w, PositiveWord(Word(Context(3), {sigma(i)})))) all = false;
      bool by_delta = oracle.left_divide(w, d).has_value();
      if (all != by_delta) return "mismatch at '" + format(w) + "'";
    }
    return std::string();
  });

  run("embedding n=3 len<=4", [] {
    Oracle oracle;
    auto words = detail::all_positive_words(3, 4);
    for (std::size_t i = 0; i < words.size(); i += 37)
      for (std::size_t j = 0; j < words.size(); j += 41) {
        bool pe = degrees(words[i]) == degrees(words[j]) &&
                  oracle.positively_equal(words[i], words[j]);
        bool ge = equal(oracle, words[i].word(), words[j].word());
        if (pe != ge)
          return "embedding mismatch at '" + format(words[i]) + "' vs '" + format(words[j]) + "'";
      }
    return std::string();
  });

  run("normal form round trip n=3", [] {
    Oracle oracle;
    const int n = 3;
    for (const char* text : {"s1-", "x1 s2 s1", "s1 s2 s2 s1", "x1 x2", "s2- x1 s2", ""}) {
      Word w = parse(text, n);
      if (!equal(oracle, reconstruct(normal_form(oracle, w)), w))
        return "round trip failed for '" + std::string(text) + "'";
    }
    return std::string();
  });

  run("SB_2 degrees decide equality", [] {
    Oracle oracle;
    const int n = 2;
    const char* words[] = {"", "s1", "s1-", "x1", "s1 x1", "x1 s1", "s1- x1", "x1 x1 s1"};
    for (const char* a : words)
      for (const char* b : words) {
        Word u = parse(a, n), v = parse(b, n);
        if (equal(oracle, u, v) != (degrees(u) == degrees(v)))
          return "mismatch at '" + std::string(a) + "' vs '" + std::string(b) + "'";
      }
    return std::string();
  });

  run("band presentation n=3", [] {
    Oracle oracle;
    PresentationReport r = verify_presentation(oracle, 3);
    if (!r.passed()) return std::string("presentation check failed");
    return std::string();
  });

  run("summit sets n=3", [] {
    Oracle oracle;
    if (!conjugate_p(oracle, parse("s1", 3), parse("s2", 3))) return std::string("s1 ~ s2 failed");
    if (conjugate_p(oracle, parse("x1", 3), parse("s1", 3)))
      return std::string("x1 !~ s1 failed");
    return std::string();
  });

  return results;
}

} // namespace sbm

#endif
