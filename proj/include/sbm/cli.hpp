#ifndef SBM_CLI_HPP
#define SBM_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbm/bkl.hpp"
#include "sbm/conjugacy.hpp"
#include "sbm/garside.hpp"
#include "sbm/rewrite.hpp"
#include "sbm/selfcheck.hpp"
#include "sbm/serialize.hpp"
#include "sbm/word.hpp"

namespace sbm::cli {

enum class Command { nf, greedy, eq, conj, summit, convert, verify, rand, selfcheck };

enum class ConvertTarget { band, artin };

struct CliRequest {
  Command command;
  int n = 0;
  std::vector<std::string> words;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t cap = Oracle::default_cap;
  Side side = Side::left;
  ConvertTarget to = ConvertTarget::band;
  int length = 8;               // rand
  std::string kinds = "s,s-,x"; // rand: allowed letter kinds
};

struct CliResult {
  int exit_code = 0;
  std::string output;
};

constexpr int exit_ok = 0;
constexpr int exit_predicate_false = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_cap = 3;
constexpr int exit_internal = 4;

namespace detail_cli {

// Platform-stable seeded generator (splitmix64 with rejection sampling).
struct Rand {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t m) {
    const std::uint64_t limit = ~0ULL - (~0ULL % m);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % m;
  }
};

inline void require_arity(const CliRequest& req, std::size_t k) {
  if (req.words.size() != k)
    throw ParseError("expected " + std::to_string(k) + " word argument(s), got " +
                     std::to_string(req.words.size()));
}

inline std::string random_word_tokens(const CliRequest& req) {
  std::vector<std::string> kinds;
  std::size_t at = 0;
  while (at <= req.kinds.size()) {
    std::size_t comma = req.kinds.find(',', at);
    if (comma == std::string::npos) comma = req.kinds.size();
    std::string k = req.kinds.substr(at, comma - at);
    if (k != "s" && k != "s-" && k != "x") throw ParseError("bad letter kind '" + k + "'");
    kinds.push_back(k);
    at = comma + 1;
  }
  if (req.length < 0) throw ParseError("length must be nonnegative");
  Rand rng{req.seed};
  std::string out;
  for (int p = 0; p < req.length; ++p) {
    const std::string& k = kinds[static_cast<std::size_t>(rng.below(kinds.size()))];
    int idx = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(req.n - 1)));
    if (!out.empty()) out += ' ';
    out += (k == "x" ? "x" : "s") + std::to_string(idx) + (k == "s-" ? "-" : "");
  }
  return out;
}

} // namespace detail_cli

/// Command dispatch. Never throws: every error is mapped to the exit-code
/// contract (2 bad input, 3 resource cap, 4 internal).
inline CliResult run(const CliRequest& req) {
  using detail_cli::require_arity;
  try {
    Context ctx(req.n);
    Oracle oracle(req.cap);
    Json out;
    std::string text;
    int code = exit_ok;

    switch (req.command) {
      case Command::nf: {
        require_arity(req, 1);
        NormalForm nf = normal_form(oracle, parse(req.words[0], req.n));
        if (req.json)
          text = to_json(nf).dump();
        else
          text = "power: " + std::to_string(nf.power) + "\nbase: " + format(nf.base);
        break;
      }
      case Command::greedy: {
        require_arity(req, 1);
        GreedyForm gf = greedy_form(oracle, parse(req.words[0], req.n), req.side);
        if (req.json) {
          text = to_json(gf).dump();
        } else {
          text = "power: " + std::to_string(gf.power);
          for (const GreedyBlock& b : gf.blocks) {
            text += "\nblock:";
            for (const PositiveWord& f : b.fragments) text += " [" + format(f) + "]";
            if (!b.xs.empty()) {
              text += " x:";
              for (int i : b.xs) text += " " + std::to_string(i);
            }
          }
        }
        break;
      }
      case Command::eq: {
        require_arity(req, 2);
        bool same = equal(oracle, parse(req.words[0], req.n), parse(req.words[1], req.n));
        code = same ? exit_ok : exit_predicate_false;
        text = req.json ? Json{{"n", req.n}, {"verdict", same ? "equal" : "not-equal"}}.dump()
                        : std::string(same ? "equal" : "not-equal");
        break;
      }
      case Command::conj: {
        require_arity(req, 2);
        bool conj = conjugate_p(oracle, parse(req.words[0], req.n), parse(req.words[1], req.n));
        code = conj ? exit_ok : exit_predicate_false;
        text = req.json
                   ? Json{{"n", req.n}, {"verdict", conj ? "conjugate" : "not-conjugate"}}.dump()
                   : std::string(conj ? "conjugate" : "not-conjugate");
        break;
      }
      case Command::summit: {
        require_arity(req, 1);
        SummitSet ss = summit_set(oracle, parse(req.words[0], req.n));
        if (req.json) {
          text = to_json(ss).dump();
        } else {
          text = "summit power: " + std::to_string(ss.summit_power);
          for (const NormalForm& nf : ss.members) text += "\nmember: " + format(nf.base);
        }
        break;
      }
      case Command::convert: {
        require_arity(req, 1);
        if (req.to == ConvertTarget::artin) {
          text = format(artin_of(parse_band(req.words[0], req.n)));
        } else {
          text = format_band(band_of_artin(parse(req.words[0], req.n)));
        }
        if (req.json) text = Json{{"n", req.n}, {"word", text}}.dump();
        break;
      }
      case Command::verify: {
        require_arity(req, 0);
        PresentationReport report = verify_presentation(oracle, req.n);
        code = report.passed() ? exit_ok : exit_predicate_false;
        if (req.json) {
          text = to_json(report).dump();
        } else {
          for (const RelationFamilyReport& f : report.families) {
            text += f.name + ": " + std::to_string(f.instances) + " instance(s), " +
                    (f.failures.empty() ? "ok" : std::to_string(f.failures.size()) + " failure(s)") +
                    "\n";
            for (const std::string& fail : f.failures) text += "  FAIL " + fail + "\n";
          }
          text += report.passed() ? "all relations hold" : "failures found";
        }
        break;
      }
      case Command::rand: {
        require_arity(req, 0);
        text = detail_cli::random_word_tokens(req);
        if (req.json) text = Json{{"n", req.n}, {"word", text}}.dump();
        break;
      }
      case Command::selfcheck: {
        require_arity(req, 0);
        bool all_ok = true;
        for (const SelfcheckResult& r : sbm::selfcheck()) {
          text += (r.ok ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : ": " + r.detail) +
                  "\n";
          all_ok = all_ok && r.ok;
        }
        text += all_ok ? "selfcheck passed" : "selfcheck failed";
        code = all_ok ? exit_ok : exit_internal;
        break;
      }
    }
    return {code, text + "\n"};
  } catch (const CapExceeded& e) {
    return {exit_cap, Json{{"error", "cap-exceeded"}, {"detail", e.what()}}.dump() + "\n"};
  } catch (const BoundExceeded& e) {
    return {exit_cap, Json{{"error", "bound-exceeded"}, {"detail", e.what()}}.dump() + "\n"};
  } catch (const ParseError& e) {
    return {exit_bad_input, std::string("error: ") + e.what() + "\n"};
  } catch (const ContextMismatch& e) {
    return {exit_bad_input, std::string("error: ") + e.what() + "\n"};
  } catch (const NonInvertible& e) {
    return {exit_bad_input, std::string("error: ") + e.what() + "\n"};
  } catch (const XLettersPresent& e) {
    return {exit_bad_input, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {exit_internal, std::string("internal error: ") + e.what() + "\n"};
  }
}

} // namespace sbm::cli

#endif
