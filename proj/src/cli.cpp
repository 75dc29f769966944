#include "cfmonoid/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfmonoid/coloring.hpp"
#include "cfmonoid/presentation.hpp"
#include "cfmonoid/rewrite.hpp"
#include "cfmonoid/semigroup.hpp"
#include "cfmonoid/witness.hpp"

namespace cfmonoid {

namespace {

// Raised for unreadable files and malformed inputs; maps to kSyntaxError.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const& path, std::string const& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write '" + path + "'");
  }
  out << content;
}

Presentation load_presentation(std::string const& path) {
  try {
    return parse_presentation(read_file(path));
  } catch (std::invalid_argument const& e) {
    throw InputError(path + ": " + e.what());
  }
}

Word load_word(std::string const& text, std::size_t n) {
  try {
    return parse_word(text, n);
  } catch (std::invalid_argument const& e) {
    throw InputError("word '" + text + "': " + e.what());
  }
}

std::string format_counts(RuleCounts const& c) {
  return "A=" + std::to_string(c.a) + " B=" + std::to_string(c.b) +
         " C=" + std::to_string(c.c) + " Z_left=" + std::to_string(c.z_left) +
         " Z_right=" + std::to_string(c.z_right) +
         " total=" + std::to_string(c.total());
}

struct BuildArgs {
  std::string cayley;
  std::string builtin_name;
  std::string coloring;
  std::string out;
};

int cmd_build(BuildArgs const& a, std::ostream& out, std::ostream& err) {
  std::optional<CayleyTable> table;
  try {
    table = a.cayley.empty() ? builtin(a.builtin_name)
                             : parse_cayley(read_file(a.cayley));
  } catch (ParseError const& e) {
    err << a.cayley << ": " << e.what() << '\n';
    return kSyntaxError;
  } catch (std::invalid_argument const& e) {
    err << e.what() << '\n';
    return kSyntaxError;
  }

  std::optional<Coloring> coloring;
  if (a.coloring.empty()) {
    coloring = build_coloring(table->order());
  } else {
    try {
      coloring = parse_coloring(read_file(a.coloring));
    } catch (ParseError const& e) {
      err << a.coloring << ": " << e.what() << '\n';
      return kSyntaxError;
    }
  }

  try {
    auto const p = generate_presentation(*table, *coloring);
    write_file(a.out, serialize_presentation(p));
    out << "n=" << p.order() << " rules: " << format_counts(p.counts())
        << '\n';
    return kOk;
  } catch (AssociativityError const& e) {
    auto const t = e.triple();
    err << "not associative: witness triple (" << t.i << "," << t.j << ","
        << t.k << ")\n";
    return kNotAssociative;
  } catch (ColoringError const& e) {
    err << e.what();
    return kBadColoring;
  } catch (std::invalid_argument const& e) {
    err << e.what() << '\n';
    return kBadColoring;
  }
}

int cmd_nf(std::string const& pres, std::string const& word, std::ostream& out) {
  auto const p = load_presentation(pres);
  out << format_word(normal_form(load_word(word, p.order()), p)) << '\n';
  return kOk;
}

int cmd_check_complete(std::string const& pres, bool verbose,
                       std::ostream& out) {
  auto const p = load_presentation(pres);
  auto const report = check_local_confluence(p);

  std::map<std::string, std::size_t> by_families;
  for (auto const& cp : report.pairs) {
    auto key = std::string(to_string(p.rules()[cp.first_rule].family)) + "-" +
               std::string(to_string(p.rules()[cp.second_rule].family));
    ++by_families[key];
  }
  out << "critical pairs: " << report.pairs.size() << '\n';
  for (auto const& [key, count] : by_families) {
    out << "  " << key << ": " << count << '\n';
  }
  for (auto const& cp : report.pairs) {
    if (verbose || !cp.joinable) {
      out << describe(cp, p) << '\n';
    }
  }
  out << "non-joinable: " << report.non_joinable << '\n';
  out << (report.confluent() ? "COMPLETE" : "NOT COMPLETE") << '\n';
  return report.confluent() ? kOk : kVerificationFailed;
}

int cmd_check_f(std::string const& file, std::size_t n, bool print,
                std::ostream& out, std::ostream& err) {
  std::optional<Coloring> c;
  if (!file.empty()) {
    try {
      c = parse_coloring(read_file(file));
    } catch (ParseError const& e) {
      err << file << ": " << e.what() << '\n';
      return kSyntaxError;
    }
  } else {
    if (n == 0) {
      err << "check-f: need --file or --n >= 1\n";
      return kSyntaxError;
    }
    c = build_coloring(n);
  }
  if (print) {
    out << format_coloring(*c);
  }
  auto const report = check_conditions(*c);
  out << report.describe();
  return report.all_passed() ? kOk : kBadColoring;
}

int cmd_check_embed(std::string const& pres, std::ostream& out) {
  auto const p = load_presentation(pres);
  auto const n = static_cast<std::uint32_t>(p.order());
  std::size_t failures = 0;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      auto const got = normal_form({Letter::s(i), Letter::s(j)}, p);
      Word const want{Letter::s(static_cast<std::uint32_t>(p.table().at(i, j)))};
      if (got != want) {
        ++failures;
        out << "s" << i << " s" << j << " -> " << format_word(got)
            << " (expected " << format_word(want) << ")\n";
      }
    }
  }
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (!is_normal_form({Letter::s(i)}, p)) {
      ++failures;
      out << "s" << i << " is not a normal form\n";
    }
  }
  out << "embedding: " << (failures == 0 ? "OK" : "FAILED") << " (n=" << n
      << ", " << failures << " failures)\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

int cmd_collapse(std::string const& pres, std::string const& u_text,
                 std::string const& v_text, std::string const& out_path,
                 std::ostream& out, std::ostream& err) {
  auto const p = load_presentation(pres);
  auto const u = load_word(u_text, p.order());
  auto const v = load_word(v_text, p.order());
  WitnessTrace trace;
  try {
    trace = collapse(u, v, p);
  } catch (std::invalid_argument const& e) {
    err << e.what() << '\n';
    return kSyntaxError;
  } catch (std::runtime_error const& e) {
    err << e.what() << '\n';
    return kBadColoring;
  }
  auto const text = format_trace(trace);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << "wrote " << trace.steps.size() << " steps to " << out_path << '\n';
  }
  return kOk;
}

int cmd_verify_trace(std::string const& pres, std::string const& trace_path,
                     std::ostream& out, std::ostream& err) {
  auto const p = load_presentation(pres);
  WitnessTrace trace;
  try {
    trace = parse_trace(read_file(trace_path), p.order());
  } catch (ParseError const& e) {
    err << trace_path << ": " << e.what() << '\n';
    return kSyntaxError;
  }
  auto const verdict = verify_trace(trace, p);
  if (verdict.accepted) {
    out << "ACCEPTED (" << trace.steps.size() << " steps)\n";
    return kOk;
  }
  out << "REJECTED";
  if (verdict.bad_step) {
    out << " at step " << *verdict.bad_step;
  }
  out << ": " << verdict.reason << '\n';
  return kVerificationFailed;
}

int cmd_enumerate(std::string const& pres, std::size_t maxlen,
                  std::ostream& out) {
  auto const p = load_presentation(pres);
  auto const words = enumerate_normal_forms(p, maxlen);
  for (auto const& w : words) {
    out << format_word(w) << '\n';
  }
  out << "# " << words.size() << " nonzero normal forms of length <= "
      << maxlen << '\n';
  return kOk;
}

}  // namespace

int run_cli(int argc, char const* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finitely presented congruence-free monoids from finite "
               "semigroups"};
  app.name("cfmonoid");
  app.require_subcommand(1, 1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "generate the presentation");
  auto* src = build->add_option_group("source");
  src->add_option("--cayley", build_args.cayley, "Cayley table file");
  src->add_option("--builtin", build_args.builtin_name, "builtin semigroup")
      ->check(CLI::IsMember(builtin_names()));
  src->require_option(1);
  build->add_option("--coloring", build_args.coloring,
                    "coloring file (default: shift construction)");
  build->add_option("--out", build_args.out, "presentation JSON output")
      ->required();

  std::string pres;
  std::string word;
  auto* nf = app.add_subcommand("nf", "print the normal form of a word");
  nf->add_option("--pres", pres, "presentation file")->required();
  nf->add_option("word", word, "word, e.g. \"x1 s2 y1\"")->required();

  bool verbose = false;
  auto* complete =
      app.add_subcommand("check-complete", "critical-pair completeness check");
  complete->add_option("--pres", pres, "presentation file")->required();
  complete->add_flag("--verbose", verbose, "list every critical pair");

  std::string f_file;
  std::size_t f_n = 0;
  bool f_print = false;
  auto* check_f = app.add_subcommand("check-f", "check conditions C1..C6");
  auto* f_src = check_f->add_option_group("source");
  f_src->add_option("--file", f_file, "coloring file");
  f_src->add_option("--n", f_n, "use the built coloring of order n");
  f_src->require_option(1);
  check_f->add_flag("--print", f_print, "print the coloring slices");

  auto* embed = app.add_subcommand("check-embed", "check that S embeds in M");
  embed->add_option("--pres", pres, "presentation file")->required();

  std::string u_text;
  std::string v_text;
  std::string out_path;
  auto* coll = app.add_subcommand("collapse", "collapse witness for (u, v)");
  coll->add_option("--pres", pres, "presentation file")->required();
  coll->add_option("u", u_text, "first word")->required();
  coll->add_option("v", v_text, "second word")->required();
  coll->add_option("--out", out_path, "trace file (default: stdout)");

  std::string trace_path;
  auto* verify = app.add_subcommand("verify-trace", "check a collapse trace");
  verify->add_option("--pres", pres, "presentation file")->required();
  verify->add_option("trace", trace_path, "trace file")->required();

  std::size_t maxlen = 0;
  auto* enumerate =
      app.add_subcommand("enumerate", "list nonzero normal forms");
  enumerate->add_option("--pres", pres, "presentation file")->required();
  enumerate->add_option("--maxlen", maxlen, "maximum length")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kSyntaxError;
  }

  try {
    if (*build) {
      return cmd_build(build_args, out, err);
    }
    if (*nf) {
      return cmd_nf(pres, word, out);
    }
    if (*complete) {
      return cmd_check_complete(pres, verbose, out);
    }
    if (*check_f) {
      return cmd_check_f(f_file, f_n, f_print, out, err);
    }
    if (*embed) {
      return cmd_check_embed(pres, out);
    }
    if (*coll) {
      return cmd_collapse(pres, u_text, v_text, out_path, out, err);
    }
    if (*verify) {
      return cmd_verify_trace(pres, trace_path, out, err);
    }
    if (*enumerate) {
      return cmd_enumerate(pres, maxlen, out);
    }
  } catch (InputError const& e) {
    err << e.what() << '\n';
    return kSyntaxError;
  }
  return kSyntaxError;
}

}  // namespace cfmonoid
