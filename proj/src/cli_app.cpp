#include "vassiliev/cli_app.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vassiliev/braid_words.hpp"
#include "vassiliev/combing.hpp"
#include "vassiliev/coset_split.hpp"
#include "vassiliev/diagram_algebra.hpp"
#include "vassiliev/errors.hpp"
#include "vassiliev/json_io.hpp"
#include "vassiliev/selfcheck.hpp"
#include "vassiliev/surface_group.hpp"

namespace vb {
namespace {

struct Config {
  int n = 2;
  int g = 1;
  int N = 3;
  int max_N = 4;
  long long fuel = 1'000'000;
  std::string format = "json";
  bool verify = false;
};

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("-n", cfg.n, "number of strands")->check(CLI::Range(1, 64));
  sub->add_option("-g", cfg.g, "genus of the surface")
      ->check(CLI::Range(1, 16));
  sub->add_option("--fuel", cfg.fuel, "budget for the face-filling search")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_flag("--verify-oracles", cfg.verify,
                "re-expand every combing level and check it against the input");
  sub->add_option("--max-N", cfg.max_N,
                  "cap on the truncation degree (raise at your own expense)")
      ->check(CLI::Range(0, 64));
}

CLI::Option* add_degree(CLI::App* sub, Config& cfg) {
  return sub->add_option("-N", cfg.N, "truncation degree")
      ->check(CLI::Range(0, 64));
}

std::string take_word(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string line;
  if (!std::getline(in, line))
    throw parse_error("expected a braid word on stdin");
  return line;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Universal finite-type invariant of braids on a closed orientable "
      "surface"};
  app.require_subcommand(1);

  Config cfg;
  std::string word1, word2;
  bool dump_k = false;

  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate the invariant of a braid word (singular allowed)");
  add_common(eval, cfg);
  add_degree(eval, cfg);
  eval->add_flag("--dump-k", dump_k,
                 "also print the combed decomposition of the kernel part");
  eval->add_option("word", word1, "braid word, or - to read it from stdin")
      ->required();

  CLI::App* cmp = app.add_subcommand(
      "compare", "find the smallest degree at which two words differ");
  add_common(cmp, cfg);
  add_degree(cmp, cfg);
  cmp->add_option("word1", word1, "first braid word, or -")->required();
  cmp->add_option("word2", word2, "second braid word, or -")->required();

  CLI::App* res = app.add_subcommand(
      "resolve", "list the signed resolutions of a singular word");
  add_common(res, cfg);
  CLI::Option* res_N = add_degree(res, cfg);
  res->add_option("word", word1, "braid word, or -")->required();

  CLI::App* self =
      app.add_subcommand("selfcheck", "run the built-in consistency suites");
  add_common(self, cfg);
  add_degree(self, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cfg.N > cfg.max_N)
      throw parse_error("truncation degree " + std::to_string(cfg.N) +
                        " exceeds the cap " + std::to_string(cfg.max_N) +
                        " (use --max-N to raise it)");
    SurfaceGroup G(cfg.g);
    const bool json = cfg.format == "json";

    if (eval->parsed()) {
      BWord w = parse_braid_word(take_word(word1, in), cfg.n, cfg.g, true);
      Fuel fuel{cfg.fuel};
      if (dump_k) {
        if (singular_count(w) > 0)
          throw pipeline_error("--dump-k needs a word without x-letters");
        KDecomp levels =
            decompose(G, cfg.n, k_part(G, w, cfg.n), fuel, cfg.verify);
        out << format_kdecomp(levels);
      }
      UElem u = u_linear(G, cfg.n, w, cfg.N, fuel, cfg.verify);
      if (json)
        out << u_to_json(u, cfg.N).dump() << "\n";
      else
        out << u_to_text(u, cfg.N);
      return 0;
    }

    if (cmp->parsed()) {
      BWord wa = parse_braid_word(take_word(word1, in), cfg.n, cfg.g, true);
      BWord wb = parse_braid_word(take_word(word2, in), cfg.n, cfg.g, true);
      Fuel fuel{cfg.fuel};
      UElem ua = u_linear(G, cfg.n, wa, cfg.N, fuel, cfg.verify);
      UElem ub = u_linear(G, cfg.n, wb, cfg.N, fuel, cfg.verify);
      int split_deg = -1;
      for (int d = 0; d <= cfg.N && split_deg < 0; ++d)
        if (graded_part(ua, d) != graded_part(ub, d)) split_deg = d;
      if (json) {
        nlohmann::json doc;
        doc["N"] = cfg.N;
        doc["distinguished"] = split_deg >= 0;
        if (split_deg >= 0) doc["degree"] = split_deg;
        out << doc.dump() << "\n";
      } else if (split_deg >= 0) {
        out << "distinguished at degree " << split_deg << "\n";
      } else {
        out << "indistinguishable up to degree " << cfg.N << "\n";
      }
      return split_deg >= 0 ? 0 : 1;
    }

    if (res->parsed()) {
      BWord w = parse_braid_word(take_word(word1, in), cfg.n, cfg.g, true);
      auto branches = resolve_singular(w);
      const bool with_u = res_N->count() > 0;
      if (json) {
        nlohmann::json doc;
        doc["resolutions"] = nlohmann::json::array();
        for (const auto& [sign, bw] : branches)
          doc["resolutions"].push_back(
              {{"sign", sign}, {"word", format_braid_word(bw)}});
        if (with_u) {
          Fuel fuel{cfg.fuel};
          doc["u"] = u_to_json(
              u_linear(G, cfg.n, w, cfg.N, fuel, cfg.verify), cfg.N);
        }
        out << doc.dump() << "\n";
      } else {
        for (const auto& [sign, bw] : branches)
          out << (sign > 0 ? "+ " : "- ") << format_braid_word(bw) << "\n";
        if (with_u) {
          Fuel fuel{cfg.fuel};
          out << u_to_text(u_linear(G, cfg.n, w, cfg.N, fuel, cfg.verify),
                           cfg.N);
        }
      }
      return 0;
    }

    SelfcheckOptions opt;
    opt.n = cfg.n;
    opt.g = cfg.g;
    opt.N = cfg.N;
    opt.fuel = cfg.fuel;
    return run_selfcheck(opt, out) ? 0 : 1;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const pipeline_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace vb
