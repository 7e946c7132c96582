// Command-line surface for the quantum-plane symmetry workbench. Every
// subcommand prints one JSON document on stdout; exit code 0 means
// pass/success, 1 a failed verification or a mismatch against --expect-empty,
// 2 a usage or configuration error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "qplane/qplane.hpp"

namespace {

using namespace qplane;

struct CliConfig {
  int N = 4;          // verification degree bound
  int B = 3;          // search box
  int max_order = 24;
  std::uint64_t seed = 0;
};

// Defaults can come from a JSON file named by --config or QPLANE_CONFIG;
// listing indeterminates there pins the canonical variable order.
CliConfig load_config(const std::string& explicit_path) {
  CliConfig cfg;
  std::string path = explicit_path;
  if (path.empty()) {
    if (const char* env = std::getenv("QPLANE_CONFIG")) path = env;
  }
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) fail(Errc::ConfigError, "cannot open config file '" + path + "'");
  json j = json::parse(in);
  if (j.contains("indeterminates"))
    for (auto& name : j.at("indeterminates")) var(name.get<std::string>());
  if (j.contains("N")) cfg.N = j.at("N").get<int>();
  if (j.contains("B")) cfg.B = j.at("B").get<int>();
  if (j.contains("max_order")) cfg.max_order = j.at("max_order").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

SL2 parse_sigma(const std::string& text) {
  std::istringstream is(text);
  long long v[4];
  char comma;
  for (int i = 0; i < 4; ++i) {
    if (i && !(is >> comma && comma == ','))
      fail(Errc::ConfigError, "--sigma wants four comma-separated integers k,l,m,n");
    if (!(is >> v[i])) fail(Errc::ConfigError, "--sigma wants four comma-separated integers");
  }
  SL2 s{v[0], v[1], v[2], v[3]};
  require_sl2(s);
  return s;
}

json read_stdin_json() {
  json j;
  try {
    j = json::parse(std::cin);
  } catch (const std::exception& e) {
    fail(Errc::ConfigError, std::string("stdin is not valid JSON: ") + e.what());
  }
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  using namespace qplane;

  CLI::App app{"exact U_q(sl2) symmetry workbench on the quantum Laurent plane"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (or QPLANE_CONFIG)");

  // family ------------------------------------------------------------
  auto* family = app.add_subcommand("family", "construct a classified plane family");
  std::string fam_kind = "generic", fam_alpha = "q^2", fam_beta = "t", fam_a = "a";
  long long fam_u = 1, fam_v = 0;
  family->add_option("kind", fam_kind, "generic | minus-identity")->required();
  family->add_option("--u", fam_u);
  family->add_option("--v", fam_v);
  family->add_option("--alpha", fam_alpha);
  family->add_option("--beta", fam_beta);
  family->add_option("--a", fam_a);

  // line-family ---------------------------------------------------------
  auto* linefam = app.add_subcommand("line-family", "construct a symmetry on C[z^+-1]");
  std::string lf_kind = "scaling", lf_gamma = "q^2", lf_a = "a";
  long long lf_r = 2;
  linefam->add_option("--kind", lf_kind, "scaling | sign | inverting");
  linefam->add_option("--gamma", lf_gamma);
  linefam->add_option("--a", lf_a);
  linefam->add_option("--r", lf_r);

  // verify / line-verify -------------------------------------------------
  auto* verify = app.add_subcommand("verify", "verify an action JSON from stdin");
  int verify_N = 0;
  verify->add_option("--N", verify_N, "degree bound (default from config)");
  auto* lverify = app.add_subcommand("line-verify", "verify a line action JSON from stdin");
  int lverify_N = 0;
  lverify->add_option("--N", lverify_N);

  // conjugate -------------------------------------------------------------
  auto* conj = app.add_subcommand("conjugate", "conjugate an action (stdin) by an automorphism");
  std::string cj_sigma = "1,0,0,1", cj_alpha = "1", cj_beta = "1";
  conj->add_option("--sigma", cj_sigma);
  conj->add_option("--alpha", cj_alpha);
  conj->add_option("--beta", cj_beta);

  // order ------------------------------------------------------------------
  auto* ord = app.add_subcommand("order", "order of an automorphism, up to a bound");
  std::string or_sigma = "1,0,0,1", or_alpha = "1", or_beta = "1";
  int or_max = 0;
  ord->add_option("--sigma", or_sigma);
  ord->add_option("--alpha", or_alpha);
  ord->add_option("--beta", or_beta);
  ord->add_option("--max", or_max, "bound (default from config)");

  // sigma-power --------------------------------------------------------------
  auto* spow = app.add_subcommand("sigma-power", "closed-form power of a hyperbolic matrix");
  std::string sp_sigma = "2,1,1,1";
  long long sp_N = 1;
  spow->add_option("--sigma", sp_sigma);
  spow->add_option("--N", sp_N)->required();

  // pbw-normalize -------------------------------------------------------------
  auto* pbw = app.add_subcommand("pbw-normalize", "normalize a word in k, kinv, e, f");
  std::string pw_word;
  std::string pw_coef = "1";
  pbw->add_option("--word", pw_word, "e.g. \"k e kinv f\"")->required();
  pbw->add_option("--coef", pw_coef, "scalar prefactor");

  // search -----------------------------------------------------------------
  auto* search = app.add_subcommand("search", "bounded-support symmetry search");
  std::string se_sigma = "1,0,0,1", se_alpha, se_beta, se_job;
  bool se_numeric = false, se_expect_empty = false, se_no_prune = false;
  int se_B = 0, se_draws = 1;
  std::uint64_t se_seed = 0;
  bool se_seed_set = false;
  search->add_option("--sigma", se_sigma);
  search->add_option("--alpha", se_alpha, "unit string (exact mode)");
  search->add_option("--beta", se_beta, "unit string (exact mode)");
  search->add_flag("--numeric", se_numeric, "draw rational unit pairs from --seed");
  search->add_option("--seed", se_seed)->each([&](const std::string&) { se_seed_set = true; });
  search->add_option("--draws", se_draws, "number of numeric draws");
  search->add_option("--B", se_B, "support box bound (default from config)");
  search->add_flag("--expect-empty", se_expect_empty, "exit 1 if any solution is found");
  search->add_flag("--no-prune", se_no_prune, "disable admissible-support pruning");
  search->add_option("--job", se_job,
                     "job spec JSON file ('-' for stdin): {\"sigma\":[[k,l],[m,n]], "
                     "\"alpha\":..., \"beta\":..., \"B\":..., \"mode\":..., \"seed\":..., "
                     "\"draws\":...}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CliConfig cfg = load_config(config_path);

    if (family->parsed()) {
      Action act;
      if (fam_kind == "generic") {
        act = generic_family(fam_u, fam_v, Unit::parse(fam_alpha), Unit::parse(fam_beta),
                             Unit::parse(fam_a));
      } else if (fam_kind == "minus-identity") {
        act = minus_identity_family(Unit::parse(fam_alpha), Unit::parse(fam_beta));
      } else {
        fail(Errc::ConfigError, "unknown family kind '" + fam_kind + "'");
      }
      emit(to_json(act));
      return 0;
    }

    if (linefam->parsed()) {
      LineFamilyKind kind;
      if (lf_kind == "scaling" || lf_kind == "1") kind = LineFamilyKind::Scaling;
      else if (lf_kind == "sign") kind = LineFamilyKind::Sign;
      else if (lf_kind == "inverting" || lf_kind == "2") kind = LineFamilyKind::Inverting;
      else fail(Errc::ConfigError, "unknown line family kind '" + lf_kind + "'");
      emit(to_json(line_family(kind, Unit::parse(lf_gamma), Unit::parse(lf_a), lf_r)));
      return 0;
    }

    if (verify->parsed()) {
      Action act = action_from_json(read_stdin_json());
      Report rep = verify_module_algebra(act, verify_N > 0 ? verify_N : cfg.N);
      emit(to_json(rep));
      return rep.pass ? 0 : 1;
    }

    if (lverify->parsed()) {
      LineAction act = line_action_from_json(read_stdin_json());
      Report rep = verify_line_action(act, lverify_N > 0 ? lverify_N : cfg.N);
      emit(to_json(rep));
      return rep.pass ? 0 : 1;
    }

    if (conj->parsed()) {
      Action act = action_from_json(read_stdin_json());
      Auto phi{parse_sigma(cj_sigma), Unit::parse(cj_alpha), Unit::parse(cj_beta)};
      emit(to_json(conjugate(act, phi)));
      return 0;
    }

    if (ord->parsed()) {
      Auto phi{parse_sigma(or_sigma), Unit::parse(or_alpha), Unit::parse(or_beta)};
      int bound = or_max > 0 ? or_max : cfg.max_order;
      auto n = order(phi, bound);
      json out;
      if (n)
        out = {{"order", *n}};
      else
        out = {{"order", nullptr}, {"bound", bound}};
      emit(out);
      return 0;
    }

    if (spow->parsed()) {
      SL2 s = parse_sigma(sp_sigma);
      SL2 p = sigma_power(s, sp_N);
      emit({{"sigma_N", {{p.k, p.l}, {p.m, p.n}}}, {"N", sp_N}});
      return 0;
    }

    if (pbw->parsed()) {
      PBWElement u = pbw_normalize(parse_word(pw_word), Scalar::parse(pw_coef));
      emit({{"terms", to_json(u)}});
      return 0;
    }

    if (search->parsed()) {
      if (!se_job.empty()) {
        json job;
        if (se_job == "-") {
          job = read_stdin_json();
        } else {
          std::ifstream in(se_job);
          if (!in) fail(Errc::ConfigError, "cannot open job file '" + se_job + "'");
          job = json::parse(in);
        }
        const auto& sg = job.at("sigma");
        se_sigma = std::to_string(sg.at(0).at(0).get<long long>()) + "," +
                   std::to_string(sg.at(0).at(1).get<long long>()) + "," +
                   std::to_string(sg.at(1).at(0).get<long long>()) + "," +
                   std::to_string(sg.at(1).at(1).get<long long>());
        if (job.contains("alpha")) se_alpha = job.at("alpha").get<std::string>();
        if (job.contains("beta")) se_beta = job.at("beta").get<std::string>();
        if (job.contains("B")) se_B = job.at("B").get<int>();
        if (job.contains("mode")) se_numeric = job.at("mode").get<std::string>() == "numeric";
        if (job.contains("seed")) {
          se_seed = job.at("seed").get<std::uint64_t>();
          se_seed_set = true;
        }
        if (job.contains("draws")) se_draws = job.at("draws").get<int>();
      }
      SL2 s = parse_sigma(se_sigma);
      int B = se_B > 0 ? se_B : cfg.B;
      SolveOptions opts;
      opts.prune = !se_no_prune;
      json solutions = json::array();
      if (se_numeric) {
        std::mt19937_64 rng(se_seed_set ? se_seed : cfg.seed);
        for (int d = 0; d < se_draws; ++d) {
          auto [al, be] = draw_unit_pair(rng);
          Auto k{s, al, be};
          for (auto& act : solve(k, SupportBox(B), opts)) {
            json js = to_json(act);
            js["params"]["draw"] = d;
            solutions.push_back(std::move(js));
          }
        }
      } else {
        if (se_alpha.empty() || se_beta.empty())
          fail(Errc::ConfigError, "exact mode needs --alpha and --beta (or pass --numeric)");
        Auto k{s, Unit::parse(se_alpha), Unit::parse(se_beta)};
        for (auto& act : solve(k, SupportBox(B), opts)) solutions.push_back(to_json(act));
      }
      emit({{"solutions", solutions}});
      if (se_expect_empty && !solutions.empty()) return 1;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
