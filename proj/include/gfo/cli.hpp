#pragma once

// Command-line front end.  run() parses argv-style arguments, writes results
// to `out` and diagnostics to `err`, and returns 0 on success, 1 on a domain
// error and 2 on a usage error.

#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gfo/automaton.hpp"
#include "gfo/genfun.hpp"
#include "gfo/oeis.hpp"
#include "gfo/oracle.hpp"
#include "gfo/serialize.hpp"
#include "gfo/wilf.hpp"
#include "gfo/witness.hpp"

namespace gfo::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// A malformed argument (as opposed to a well-formed request the math rejects).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Word parse_word(const std::string& text) {
  try {
    Word w = Word::parse(text);
    if (w.empty()) throw UsageError("empty word");
    return w;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

inline Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid rational '" + text + "'");
  }
}

inline GfSet parse_set(const std::string& text) {
  try {
    return parse_gf_set(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct RoutedS {
  RatFun S;
  std::string route;
};

/// S(u;t,x) from the sharpest available construction.
inline RoutedS best_S(const Word& u) {
  if (has_incdec_factorization(u)) return {S_incdec(u), "incdec"};
  if (auto shape = bac_shape(u)) return {S_bac(shape->a, shape->b, shape->c), "bac"};
  return {S_automaton(u), "automaton"};
}

inline RatFun select(const GenFunBundle& b, GfSet set) {
  switch (set) {
    case GfSet::S: return b.S;
    case GfSet::F: return b.F;
    case GfSet::A: return b.A;
    case GfSet::W: return b.W;
  }
  return b.S;
}

/// S, F, A or W over [m]: F = S / (1 - sum x_i), A = 1 / (1 - sum x_i) - F,
/// W = prod_i sum_{j >= u_i} x_j.
inline RoutedS finite_gf(const Word& u, std::size_t m, GfSet set) {
  if (m == 0 || m > kMaxVars) throw Error("alphabet bound out of supported range");
  if (u.max_letter() > m) throw Error("pattern letter exceeds the alphabet bound m");
  const Poly one = Poly::constant(1, m);
  if (set == GfSet::W) {
    Poly w = one;
    for (Letter a : u) w = w * letters_at_least(a, m);
    return {RatFun(w), "product"};
  }
  RoutedS s = is_weakly_increasing(u) ? RoutedS{S_finite_increasing(u, m), "finite-increasing"}
                                      : RoutedS{S_automaton_finite(u, m), "automaton"};
  const RatFun all(one, one - letters_at_least(1, m));
  if (set == GfSet::S) return s;
  const RatFun f = s.S * all;
  if (set == GfSet::F) return {f, s.route};
  return {all - f, s.route};
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating functions for generalized factor order on words", "gfo"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  bool json_out = false;
  bool dot = false;
  bool exact = false;
  std::string set_text = "S";
  std::string word_text;
  std::vector<std::string> words;
  unsigned order = 10;
  std::string t_text = "1";
  std::size_t m = 0;
  std::size_t length = 6;
  unsigned max_sigma = 4;
  std::size_t pattern_length = 3;
  std::vector<std::string> apply_words;
  std::string probe_kind;
  unsigned probe_order = 0;

  auto* closed = app.add_subcommand("closed-form", "Print S, F, A or W as a rational function");
  closed->add_option("word", word_text, "Pattern word")->required();
  closed->add_option("--set", set_text, "S, F, A or W");
  closed->add_option("--m", m, "Finite alphabet [m] instead of (t, x)");
  closed->add_flag("--json", json_out, "JSON output");
  closed->add_flag("--dot", dot, "Print the embedding automaton in DOT format instead");

  auto* series = app.add_subcommand("series", "Series coefficients of a generating function at t");
  series->add_option("--word,word", word_text, "Pattern word")->required();
  series->add_option("--set", set_text, "S, F, A or W");
  series->add_option("--order", order, "Highest x-degree");
  series->add_option("--t", t_text, "Rational value substituted for t");
  series->add_flag("--json", json_out, "JSON output");

  auto* oracle = app.add_subcommand("oracle", "Brute-force counts by weight, or by content over [m]");
  oracle->add_option("--word,word", word_text, "Pattern word")->required();
  oracle->add_option("--set", set_text, "S, F or A");
  oracle->add_option("--order", order, "Largest weight enumerated");
  oracle->add_option("--m", m, "Census over [m]^{<=L} by content");
  oracle->add_option("--length", length, "Length bound L for the content census");
  oracle->add_flag("--json", json_out, "JSON census dump");

  auto* prof = app.add_subcommand("profile", "The values d_i + Sigma(s_i), i = 1..n");
  prof->add_option("word", word_text, "Pattern word")->required();
  prof->add_flag("--json", json_out, "JSON output");

  auto* classify = app.add_subcommand("classify3", "Wilf classes among rearrangements of three letters");
  classify->add_option("letters", words, "A three-letter word, or three letters")->required()->expected(1, 3);
  classify->add_flag("--json", json_out, "JSON output");

  auto* wilf = app.add_subcommand("wilf", "Decide whether two words are Wilf equivalent");
  wilf->add_option("words", words, "Two pattern words")->required()->expected(2);
  wilf->add_flag("--exact", exact, "Use the exact automaton comparison only");
  wilf->add_option("--order", order, "Weight bound of the series stage");
  wilf->add_flag("--json", json_out, "JSON line output");

  auto* witness = app.add_subcommand("witness", "Build a rearrangement witness over [m]^{<=L}");
  witness->add_option("words", words, "Two pattern words")->required()->expected(2);
  witness->add_option("--m", m, "Alphabet bound")->required();
  witness->add_option("--length", length, "Length bound L");
  witness->add_option("--apply", apply_words, "Words to map through the lifted table");
  witness->add_flag("--json", json_out, "Print the table as versioned JSON");

  auto* probe = app.add_subcommand("probe", "Bounded probes of the rearrangement conjectures");
  probe->add_option("kind", probe_kind, "weak, strong or monomial")
      ->required()
      ->check(CLI::IsMember({"weak", "strong", "monomial"}));
  probe->add_option("word", word_text, "Pattern word (monomial probe)");
  probe->add_option("--max-sigma", max_sigma, "Letter-sum bound (weak probe)");
  probe->add_option("--order", probe_order, "Series weight bound (weak probe, 0 = automatic)");
  probe->add_option("--m", m, "Alphabet bound (strong probe)");
  probe->add_option("--length", length, "Census length bound (strong probe)");
  probe->add_option("--max-pattern-length", pattern_length, "Pattern length bound (strong probe)");
  probe->add_flag("--json", json_out, "JSON output");

  auto* oeis = app.add_subcommand("oeis-check", "Compare computed prefixes with the vendored OEIS fixtures");
  oeis->add_flag("--json", json_out, "JSON output");

  std::vector<std::string> argv_store{"gfo"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (closed->parsed()) {
      const Word u = parse_word(word_text);
      const GfSet set = parse_set(set_text);
      if (dot) {
        const auto classes = m ? letter_classes(u, Alphabet::finite(static_cast<Letter>(m))) : letter_classes(u);
        out << build_dfa(u, classes).dot();
        return kOk;
      }
      RoutedS r;
      std::string vars;
      std::vector<std::string> names = tx::names();
      if (m) {
        r = finite_gf(u, m, set);
        vars = "x1..x" + std::to_string(m);
        names.clear();
        for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
      } else {
        RoutedS s = best_S(u);
        r = {select(derive_FAW(s.S, u), set), s.route};
        vars = "t,x";
      }
      const std::string label = std::string(to_string(set)) + "(" + u.str() + ";" + vars + ")";
      if (json_out) {
        out << nlohmann::json{{"word", u.str()}, {"set", to_string(set)}, {"route", r.route},
                              {"function", json::to_json(r.S, names)}}
                   .dump()
            << "\n";
      } else {
        out << label << " = " << r.S.str(names) << "\n";
      }
      return kOk;
    }

    if (series->parsed()) {
      const Word u = parse_word(word_text);
      const GfSet set = parse_set(set_text);
      const Rational t = parse_rational(t_text);
      const RoutedS s = best_S(u);
      const SeriesPrefix prefix = series_x(select(derive_FAW(s.S, u), set), order, t);
      if (json_out) {
        auto j = json::to_json(prefix);
        j["word"] = u.str();
        j["set"] = to_string(set);
        j["t"] = t.get_str();
        out << j.dump() << "\n";
      } else {
        out << prefix.str() << "\n";
      }
      return kOk;
    }

    if (oracle->parsed()) {
      const Word u = parse_word(word_text);
      const GfSet set = parse_set(set_text);
      if (set == GfSet::W) throw UsageError("the oracle tracks S, F and A only");
      if (m) {
        const ContentCensus c = multivar_census(u, m, length);
        if (json_out) {
          out << json::to_json(c).dump() << "\n";
        } else {
          for (const auto& [content, t] : c.counts) {
            std::string key;
            for (auto e : content) key += (key.empty() ? "" : ",") + std::to_string(e);
            const std::uint64_t v = set == GfSet::S ? t.in_s : set == GfSet::F ? t.in_f : t.in_a;
            out << "(" << key << ") " << v << "\n";
          }
        }
        return kOk;
      }
      if (json_out) {
        out << json::to_json(weight_census(u, order)).dump() << "\n";
      } else {
        out << series_oracle(set, u, order).str() << "\n";
      }
      return kOk;
    }

    if (prof->parsed()) {
      const Word u = parse_word(word_text);
      const auto p = profile(u);
      if (json_out) {
        out << nlohmann::json{{"word", u.str()}, {"profile", p}}.dump() << "\n";
      } else {
        std::string line;
        for (auto v : p) line += (line.empty() ? "" : " ") + std::to_string(v);
        out << line << "\n";
      }
      return kOk;
    }

    if (classify->parsed()) {
      std::vector<Letter> letters;
      if (words.size() == 1) {
        const Word w = parse_word(words[0]);
        letters.assign(w.begin(), w.end());
      } else {
        for (const auto& s : words) {
          const Word w = parse_word(s);
          if (w.size() != 1) throw UsageError("expected single letters");
          letters.push_back(w[0]);
        }
      }
      if (letters.size() != 3) throw UsageError("classify3 needs exactly three letters");
      const auto classes = classify_length3(letters[0], letters[1], letters[2]);
      if (json_out) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& cls : classes) {
          nlohmann::json c = nlohmann::json::array();
          for (const auto& w : cls) c.push_back(w.str());
          j.push_back(c);
        }
        out << nlohmann::json{{"classes", j}}.dump() << "\n";
      } else {
        for (const auto& cls : classes) {
          std::string line;
          for (const auto& w : cls) line += (line.empty() ? "" : ", ") + w.str();
          out << "{" << line << "}\n";
        }
      }
      return kOk;
    }

    if (wilf->parsed()) {
      const Word u = parse_word(words[0]);
      const Word v = parse_word(words[1]);
      CompareOptions options;
      options.series_order = order;
      const EquivalenceVerdict verdict = exact ? compare_exact(u, v) : compare(u, v, options);
      if (json_out) {
        out << json::to_json(verdict).dump() << "\n";
      } else {
        out << verdict.str() << "\n";
      }
      return kOk;
    }

    if (witness->parsed()) {
      const Word u = parse_word(words[0]);
      const Word v = parse_word(words[1]);
      std::vector<Word> inputs;
      for (const auto& s : apply_words) inputs.push_back(parse_word(s));
      const WitnessTable table = witness_build(u, v, m, length);
      if (json_out) {
        auto j = json::to_json(table);
        if (!inputs.empty()) {
          nlohmann::json applied = nlohmann::json::array();
          for (const auto& w : inputs) applied.push_back({w.str(), witness_apply(table, w).str()});
          j["applied"] = applied;
        }
        out << j.dump() << "\n";
        return kOk;
      }
      out << "witness " << u.str() << " -> " << v.str() << " over [" << m << "]^{<=" << length
          << "}: " << table.size() << " words in " << table.classes().size() << " classes"
          << (table.is_identity() ? " (identity)" : "") << "\n";
      for (const auto& w : inputs) out << w.str() << " -> " << witness_apply(table, w).str() << "\n";
      return kOk;
    }

    if (probe->parsed()) {
      if (probe_kind == "monomial") {
        if (word_text.empty()) throw UsageError("the monomial probe needs a word");
        const MonomialProbe p = numerator_monomial_probe(parse_word(word_text));
        if (json_out) {
          out << nlohmann::json{{"word", p.u.str()},
                                {"monomial", p.monomial},
                                {"numerator", p.numerator_str()},
                                {"denominator", p.denominator_str()},
                                {"note", MonomialProbe::kNote}}
                     .dump()
              << "\n";
        } else {
          out << "monomial numerator: " << (p.monomial ? "yes" : "no") << "\n"
              << "S(" << p.u.str() << ";1,x) = (" << p.numerator_str() << ") / (" << p.denominator_str() << ")\n"
              << MonomialProbe::kNote << "\n";
        }
        return kOk;
      }
      if (probe_kind == "weak") {
        WeakProbeOptions options;
        options.series_order = probe_order;
        const WeakProbeReport r = weak_conjecture_probe(max_sigma, options);
        if (json_out) {
          auto list = [](const std::vector<EquivalenceVerdict>& vs) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& v : vs) a.push_back(json::to_json(v));
            return a;
          };
          nlohmann::json mismatches = nlohmann::json::array();
          for (const auto& pm : r.profile_mismatches) mismatches.push_back({pm.u.str(), pm.v.str()});
          out << nlohmann::json{{"max_sigma", r.max_sigma},
                                {"series_order", r.series_order},
                                {"patterns", r.patterns},
                                {"pairs", r.pairs},
                                {"series_certificates", r.series_certificates},
                                {"exact_certificates", r.exact_certificates},
                                {"violations", list(r.violations)},
                                {"inconclusive", list(r.inconclusive)},
                                {"rearrangement_pairs", r.rearrangement_pairs},
                                {"equivalent_rearrangements", list(r.equivalent_rearrangements)},
                                {"profile_mismatches", mismatches}}
                     .dump()
              << "\n";
        } else {
          out << "patterns with letter sum <= " << r.max_sigma << ": " << r.patterns << "\n"
              << "non-rearrangement pairs: " << r.pairs << " (series certificates " << r.series_certificates
              << ", exact certificates " << r.exact_certificates << ")\n"
              << "violations: " << r.violations.size() << "\n"
              << "inconclusive: " << r.inconclusive.size() << "\n"
              << "rearrangement pairs: " << r.rearrangement_pairs << " (equivalent "
              << r.equivalent_rearrangements.size() << ", profile mismatches " << r.profile_mismatches.size()
              << ")\n";
          for (const auto& v : r.violations) out << "VIOLATION " << v.u.str() << " " << v.v.str() << ": " << v.str() << "\n";
          for (const auto& v : r.inconclusive) out << "INCONCLUSIVE " << v.u.str() << " " << v.v.str() << "\n";
          for (const auto& pm : r.profile_mismatches) {
            out << "PROFILE MISMATCH " << pm.u.str() << " " << pm.v.str() << "\n";
          }
        }
        return r.clean() ? kOk : kDomainError;
      }
      StrongProbeOptions options;
      options.m = m ? m : 3;
      options.max_pattern_length = pattern_length;
      options.max_length = length;
      const StrongProbeReport r = strong_conjecture_probe(options);
      if (json_out) {
        nlohmann::json mm = nlohmann::json::array();
        for (const auto& x : r.mismatches) mm.push_back({{"u", x.u.str()}, {"v", x.v.str()}, {"reason", x.reason}});
        out << nlohmann::json{{"m", r.m},
                              {"max_pattern_length", r.max_pattern_length},
                              {"max_length", r.max_length},
                              {"patterns", r.patterns},
                              {"equivalent_pairs", r.equivalent_pairs},
                              {"symbolic_checks", r.symbolic_checks},
                              {"mismatches", mm},
                              {"profile_mismatches", r.profile_mismatches.size()}}
                   .dump()
            << "\n";
      } else {
        out << "patterns over [" << r.m << "] of length <= " << r.max_pattern_length << ": " << r.patterns << "\n"
            << "Wilf-equivalent pairs: " << r.equivalent_pairs << " (symbolic checks " << r.symbolic_checks << ")\n"
            << "mismatches: " << r.mismatches.size() << "\n";
        for (const auto& x : r.mismatches) out << "MISMATCH " << x.u.str() << " " << x.v.str() << ": " << x.reason << "\n";
      }
      return r.clean() ? kOk : kDomainError;
    }

    if (oeis->parsed()) {
      bool all_ok = true;
      nlohmann::json results = nlohmann::json::array();
      for (const auto& check : oeis::checks()) {
        const oeis::Fixture* fixture = nullptr;
        for (const auto& f : oeis::fixtures()) {
          if (f.id == check.id && f.column == check.column) fixture = &f;
        }
        if (!fixture) throw Error("no fixture for " + std::string(check.id));
        const Word u = Word::parse(check.pattern);
        const GfSet set = parse_gf_set(std::string(1, check.set));
        const SeriesPrefix s =
            series_x(select(derive_FAW(best_S(u).S, u), set), check.first_degree + check.count - 1);
        bool ok = check.first_index + check.count <= fixture->terms.size();
        std::size_t bad = check.count;
        for (std::size_t k = 0; ok && k < check.count; ++k) {
          if (s.coefficients[check.first_degree + k] != BigInt(static_cast<long>(fixture->terms[check.first_index + k]))) {
            ok = false;
            bad = k;
          }
        }
        all_ok = all_ok && ok;
        std::string id(check.id);
        if (check.column) id += " column " + std::to_string(check.column);
        const std::string gf = std::string(1, check.set) + "(" + std::string(check.pattern) + ";1,x)";
        if (json_out) {
          nlohmann::json r{{"id", std::string(check.id)}, {"column", check.column}, {"gf", gf},
                           {"first_degree", check.first_degree}, {"terms", check.count}, {"pass", ok}};
          if (!ok && bad < check.count) r["first_mismatch_degree"] = check.first_degree + bad;
          results.push_back(r);
        } else {
          out << (ok ? "PASS " : "FAIL ") << id << " vs " << gf << " from x^" << check.first_degree << ", "
              << check.count << " terms";
          if (!ok && bad < check.count) out << " (first mismatch at x^" << check.first_degree + bad << ")";
          out << "\n";
        }
      }
      if (json_out) out << nlohmann::json{{"checks", results}, {"pass", all_ok}}.dump() << "\n";
      return all_ok ? kOk : kDomainError;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace gfo::cli
