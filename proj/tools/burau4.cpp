// Command-line front end: verify, eval, eq, translate, search.
//
// Exit codes: 0 success, 1 identity-suite failure, 2 usage or input error,
// 3 a search hit certified as a nontrivial Burau kernel element.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/identities.hpp"
#include "burau4/kernelsearch.hpp"
#include "burau4/normalform.hpp"
#include "burau4/word_syntax.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDiscovery = 3;

using namespace burau4;

int cmd_verify(bool quiet) {
  auto rows = verify_matrix_identities();
  auto braid_rows = verify_braid_identities();
  bool all = true;
  auto print = [&](const char* section, const std::vector<IdentityCheck>& checks) {
    if (!quiet) {
      std::cout << "== " << section << '\n';
    }
    for (const auto& c : checks) {
      all = all && c.passed;
      if (!quiet || !c.passed) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "    [" << c.statement
                  << "]\n";
      }
    }
  };
  print("matrix identities", rows);
  print("braid identities", braid_rows);
  std::cout << (all ? "all identities hold" : "IDENTITY FAILURE") << '\n';
  return all ? kExitOk : kExitIdentityFailure;
}

int cmd_eval(const std::string& word) {
  BraidWord w = parse_braid_word(word);
  Mat3 m = burau_eval(w);
  std::cout << m.to_string() << '\n' << "det: " << m.det().to_string() << '\n';
  return kExitOk;
}

int cmd_eq(const std::string& lhs, const std::string& rhs) {
  bool same = braid_eq(parse_braid_word(lhs), parse_braid_word(rhs));
  std::cout << (same ? "equal" : "not equal") << '\n';
  return kExitOk;
}

int cmd_translate(const std::string& word, bool conjugate, bool verbose) {
  GLWord w = parse_gl_word(word);
  if (conjugate) {
    auto c = conjugate_to_shape(w);
    std::cout << "conjugated: " << format_gl_word(c.word) << "   (p = " << c.p << ")\n";
    w = c.word;
  }
  RewriteTrail trail;
  AltWord a = gl_substitute(w, verbose ? &trail : nullptr);
  for (const auto& step : trail) {
    std::cout << "  " << step << '\n';
  }
  std::cout << "m: " << a.center_exponent() << '\n'
            << "syllables: " << a.syllable_string() << '\n';
  if (auto shape = theorem_shape(a)) {
    std::string exps;
    for (int e : shape->exps) {
      exps += std::to_string(e);
    }
    std::cout << "shape: yes (k = " << shape->exps.size()
              << ", exponents = " << (exps.empty() ? "-" : exps) << ")\n";
  } else {
    std::cout << "shape: no\n";
  }
  return kExitOk;
}

std::vector<int> parse_exps(const std::string& digits) {
  std::vector<int> out;
  if (digits == "-") {
    return out;
  }
  for (char c : digits) {
    if (c < '0' || c > '3') {
      throw CLI::ValidationError("--plant", "exponent digits must be 0-3, got '" + digits + "'");
    }
    out.push_back(c - '0');
  }
  return out;
}

void print_certificate(std::ostream& os, const CertifiedRecord& cr) {
  os << format_record(cr.record);
  if (cr.certificate) {
    os << "  => " << to_string(cr.certificate->kind) << ": " << cr.certificate->detail;
  }
  os << '\n';
}

struct SearchOptions {
  int                      max_k = 0;
  bool                     dedup = false;
  unsigned                 workers = 1;
  std::string              checkpoint;
  std::string              out;
  std::vector<std::string> planted;
};

// Keeps the first `lines` lines of a record file.  Records emitted after the
// last checkpoint are re-emitted on resume, so the file is cut back to the
// count the checkpoint accounts for before appending.
void truncate_records(const std::filesystem::path& path, std::uint64_t lines) {
  std::ifstream in(path, std::ios::binary);
  std::string kept;
  std::string line;
  for (std::uint64_t n = 0; n < lines && std::getline(in, line); ++n) {
    kept += line;
    kept += '\n';
  }
  in.close();
  std::ofstream(path, std::ios::binary | std::ios::trunc) << kept;
}

int cmd_search(const SearchOptions& opt) {
  SearchConfig cfg;
  cfg.max_k = opt.max_k;
  cfg.dedup = opt.dedup;
  cfg.workers = opt.workers;
  if (!opt.checkpoint.empty()) {
    cfg.checkpoint_path = opt.checkpoint;
  }
  for (const auto& p : opt.planted) {
    cfg.planted.push_back(parse_exps(p));
  }
  const bool resuming = cfg.checkpoint_path && std::filesystem::exists(*cfg.checkpoint_path);

  std::ofstream file;
  std::ostream* records = &std::cout;
  if (!opt.out.empty()) {
    if (resuming && std::filesystem::exists(opt.out)) {
      std::uint64_t done = 0;
      for (const auto& l : read_checkpoint(*cfg.checkpoint_path).per_k) {
        done += l.sequences;
      }
      truncate_records(opt.out, done);
    }
    file.open(opt.out, resuming ? std::ios::app : std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot open output file " << opt.out << '\n';
      return kExitUsage;
    }
    records = &file;
  }

  SearchSummary s = search(cfg, [&](const SearchRecord& r) { *records << format_record(r) << '\n'; });
  records->flush();

  std::ostream& os = std::cout;
  for (const auto& p : s.planted) {
    os << "# planted\t";
    print_certificate(os, p);
  }
  os << "# summary" << (s.resumed ? " (resumed from checkpoint)" : "") << '\n';
  for (std::size_t k = 0; k < s.per_k.size(); ++k) {
    const auto& l = s.per_k[k];
    os << "# k=" << k << "\tsequences=" << l.sequences << "\thits=" << l.hits
       << "\tother_scalars=" << l.other_scalars << '\n';
  }
  os << "# total sequences=" << s.sequences << "\thits=" << s.hits
     << "\tother_scalars=" << s.other_scalars << '\n';
  if (cfg.dedup) {
    os << "# dedup classes=" << s.dedup_classes << "\tcollisions=" << s.collisions << '\n';
    if (s.collisions != 0) {
      os << "# NOTE: distinct sequences with projectively equal products; "
            "their quotient is a scalar-image candidate worth inspecting\n";
    }
  }
  os << "# wall time " << s.wall_seconds << " s\n";
  for (const auto& h : s.hit_certificates) {
    os << "# hit\t";
    print_certificate(os, h);
  }

  if (s.discovery) {
    const auto& d = *s.discovery;
    for (std::ostream* out : {&std::cout, &std::cerr}) {
      *out << "\n################################################################\n"
           << "#  NONTRIVIAL BURAU KERNEL ELEMENT FOUND\n"
           << "#  record: " << format_record(d.record) << '\n'
           << "#  braid : " << d.certificate->braid.to_string() << '\n'
           << "################################################################\n";
    }
    return kExitDiscovery;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for the reduced Burau representation of B4"};
  app.footer(kWordGrammarHelp);
  app.require_subcommand(1);

  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "Check every matrix and braid identity exactly");
  verify->add_flag("-q,--quiet", quiet, "Only print failures and the verdict");

  std::string word;
  auto* eval = app.add_subcommand("eval", "Print the Burau matrix of a braid word and its determinant");
  eval->add_option("word", word, "Braid word")->required();

  std::string lhs;
  std::string rhs;
  auto* eq = app.add_subcommand("eq", "Decide whether two braid words are equal in B4");
  eq->add_option("lhs", lhs, "First braid word")->required();
  eq->add_option("rhs", rhs, "Second braid word")->required();

  std::string gl_word;
  bool conjugate = false;
  bool verbose = false;
  auto* translate = app.add_subcommand(
      "translate", "Rewrite a word in a, b into theta^m and alternating tau / Delta syllables");
  translate->add_option("word", gl_word, "Word over a, b and their powers")->required();
  translate->add_flag("-c,--conjugate", conjugate,
                      "First conjugate by a power of b to get prefix b^-1 and suffix b");
  translate->add_flag("-v,--verbose", verbose, "Print every rewrite rule applied");

  SearchOptions sopt;
  auto* search_cmd = app.add_subcommand("search", "Enumerate the matrix words and look for scalars");
  search_cmd->add_option("--max-k", sopt.max_k, "Largest number of interior exponents")
      ->required()
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_flag("--dedup", sopt.dedup, "Assign projective dedup classes");
  search_cmd->add_option("--workers", sopt.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--checkpoint", sopt.checkpoint, "Checkpoint file (resumed if present)");
  search_cmd->add_option("--out", sopt.out, "Write records here instead of stdout");
  search_cmd->add_option("--plant", sopt.planted,
                         "Control exponent string to evaluate first, digits 0-3 (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      return cmd_verify(quiet);
    }
    if (*eval) {
      return cmd_eval(word);
    }
    if (*eq) {
      return cmd_eq(lhs, rhs);
    }
    if (*translate) {
      return cmd_translate(gl_word, conjugate, verbose);
    }
    if (*search_cmd) {
      return cmd_search(sopt);
    }
  } catch (const WordParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotConjugable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CheckpointCorrupt& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
