#include "asigma/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "asigma/census.hpp"
#include "asigma/families.hpp"
#include "asigma/graph6.hpp"
#include "asigma/independence.hpp"
#include "asigma/search.hpp"
#include "asigma/spectral.hpp"
#include "asigma/verification.hpp"

namespace asigma {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string fmt_lambda(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%#.15g", x);
  return buf;
}

// "-" reads one graph6 code per line from the input stream.
std::vector<Graph> read_graphs(const std::string& arg, std::istream& in) {
  std::vector<Graph> out;
  try {
    if (arg == "-") {
      auto src = graph6_stream(in);
      out = collect(*src);
    } else {
      out.push_back(from_graph6(arg));
    }
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad graph6 input: ") + e.what());
  }
  return out;
}

CheckParams parse_param(const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
  std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
  CheckParams j;
  try {
    j[key] = nlohmann::json::parse(value);
  } catch (const nlohmann::json::exception&) {
    j[key] = value;
  }
  return j;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"A_sigma spectral toolkit: spectra, families, extremal searches and result checks", "asigma"};
  app.set_version_flag("--version", std::string(ASIGMA_VERSION));
  app.require_subcommand(1);

  // spectral
  auto* spectral = app.add_subcommand("spectral", "largest A_sigma eigenvalue of a graph6 graph ('-' reads stdin)");
  std::string sp_g6;
  double sp_sigma = 0.0, sp_tol = kDefaultTol;
  bool sp_json = false;
  spectral->add_option("graph6", sp_g6, "graph6 code")->required();
  spectral->add_option("--sigma", sp_sigma, "sigma in [0,1)")->required();
  spectral->add_option("--tol", sp_tol, "power-iteration tolerance");
  spectral->add_flag("--json", sp_json, "print lambda, Perron vector and residual as JSON");

  // alpha
  auto* alpha_cmd = app.add_subcommand("alpha", "independence number of a graph6 graph ('-' reads stdin)");
  std::string al_g6;
  bool al_json = false;
  alpha_cmd->add_option("graph6", al_g6, "graph6 code")->required();
  alpha_cmd->add_flag("--json", al_json, "print a maximum independent set too");

  // family
  auto* family = app.add_subcommand("family", "build a named family member and print its graph6");
  std::string fa_spec;
  bool fa_json = false;
  family->add_option("spec", fa_spec, "family text, e.g. t2:2,1,1,2 or d_graph:10")->required();
  family->add_flag("--json", fa_json, "print order, size and alpha too");

  // search
  auto* search = app.add_subcommand("search", "exhaustive minimiser search over G_{n,alpha}");
  int se_n = 0, se_alpha = 0;
  std::vector<double> se_sigmas;
  std::string se_class = "tree", se_census;
  double se_tie = 1e-9;
  unsigned se_threads = 0;
  search->add_option("--n", se_n, "order")->required();
  search->add_option("--alpha", se_alpha, "independence number")->required();
  search->add_option("--sigma", se_sigmas, "one or more sigma values")->required();
  search->add_option("--class", se_class, "tree or graph")->check(CLI::IsMember({"tree", "graph", "connected"}));
  search->add_option("--tie-tol", se_tie, "relative tie tolerance");
  search->add_option("--threads", se_threads, "worker threads (0 = all cores)");
  search->add_option("--census", se_census,
                     "census file: cached keys are compared bit-for-bit, new keys appended");

  // verify
  auto* verify = app.add_subcommand("verify", "run registered checks, one JSON line per outcome");
  std::string ve_suite;
  std::vector<std::string> ve_checks, ve_params;
  double ve_budget = 3600;
  std::uint64_t ve_seed = 1;
  unsigned ve_threads = 0;
  bool ve_list = false;
  verify->add_option("--suite", ve_suite, "lemmas, thm1, thm2, thm3, tables or all");
  verify->add_option("--check", ve_checks, "run individual checks by id");
  verify->add_option("--param", ve_params, "key=value parameter for --check (value parsed as JSON)");
  verify->add_option("--budget", ve_budget, "seconds after which unstarted checks are skipped");
  verify->add_option("--seed", ve_seed, "random seed");
  verify->add_option("--threads", ve_threads, "concurrent checks (0 = all cores)");
  verify->add_flag("--list", ve_list, "list check ids and suites");

  // candidates
  auto* candidates = app.add_subcommand("candidates", "candidate T1/T2 rows for alpha = n-4");
  int ca_n = 0;
  bool ca_refined = false;
  candidates->add_option("--n", ca_n, "order (>= 12)")->required();
  candidates->add_flag("--refined", ca_refined, "apply the refined tables");

  // census
  auto* census = app.add_subcommand("census", "move census records between files");
  census->require_subcommand(1);
  std::string cs_store = "asigma_census.jsonl", cs_path;
  census->add_option("--store", cs_store, "census store (default asigma_census.jsonl)");
  auto* cs_export = census->add_subcommand("export", "write the deduplicated store to a file");
  cs_export->add_option("path", cs_path)->required();
  auto* cs_import = census->add_subcommand("import", "validate a file and append its records to the store");
  cs_import->add_option("path", cs_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spectral->parsed()) {
      check_sigma(sp_sigma);
      if (!(sp_tol > 0)) throw UsageError("--tol must be positive");
      for (const Graph& g : read_graphs(sp_g6, in)) {
        SpectralResult r = spectral_radius(g, sp_sigma, sp_tol);
        if (sp_json) {
          nlohmann::json j = {{"graph6", to_graph6(g)}, {"sigma", sp_sigma}, {"perron", r.perron},
                              {"residual", r.residual}, {"iterations", r.iterations}};
          std::string s = j.dump();
          out << "{\"lambda\":" << fmt_lambda(r.lambda) << "," << s.substr(1) << "\n";
        } else {
          out << fmt_lambda(r.lambda) << "\n";
        }
      }
      return 0;
    }
    if (alpha_cmd->parsed()) {
      for (const Graph& g : read_graphs(al_g6, in)) {
        IndependenceCertificate c = independence_number(g);
        if (al_json) {
          out << nlohmann::json{{"graph6", to_graph6(g)}, {"alpha", c.alpha}, {"witness", c.witness}}.dump()
              << "\n";
        } else {
          out << c.alpha << "\n";
        }
      }
      return 0;
    }
    if (family->parsed()) {
      Graph g;
      try {
        g = build(parse_family(fa_spec));
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad family spec: ") + e.what());
      }
      if (fa_json) {
        out << nlohmann::json{{"spec", fa_spec}, {"graph6", to_graph6(g)}, {"n", g.order()},
                              {"m", g.size()}, {"alpha", independence_number(g).alpha}}
                   .dump()
            << "\n";
      } else {
        out << to_graph6(g) << "\n";
      }
      return 0;
    }
    if (search->parsed()) {
      SearchOptions opts;
      opts.tie_tol = se_tie;
      opts.threads = se_threads;
      SearchSpace space{se_n, se_alpha, parse_graph_class(se_class)};
      std::vector<SearchRecord> recs;
      try {
        recs = find_minimizers_multi(space, se_sigmas, opts);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      int status = 0;
      std::vector<CensusEntry> cached, fresh;
      if (!se_census.empty() && std::filesystem::exists(se_census)) {
        CensusLoad load = census_load(se_census);
        for (const auto& w : load.warnings) err << "warning: " << w << "\n";
        cached = std::move(load.entries);
      }
      for (const auto& r : recs) {
        out << to_json(r) << "\n";
        if (se_census.empty()) continue;
        CensusEntry e = make_census_entry(r);
        if (auto hit = census_find(cached, e.key())) {
          if (to_json(hit->record) != to_json(r)) {
            err << "census mismatch for sigma=" << nlohmann::json(r.sigma).dump() << ": cached "
                << to_json(hit->record) << "\n";
            status = 1;
          }
        } else {
          fresh.push_back(e);
        }
      }
      if (!fresh.empty()) census_store(fresh, se_census);
      return status;
    }
    if (verify->parsed()) {
      if (ve_list) {
        for (const auto& id : check_ids()) {
          std::vector<std::string> in_suites;
          for (const auto& s : suite_names()) {
            auto ids = suite_checks(s);
            if (s != "all" && std::find(ids.begin(), ids.end(), id) != ids.end()) in_suites.push_back(s);
          }
          out << nlohmann::json{{"check", id}, {"suites", in_suites}, {"description", check_description(id)}}.dump()
              << "\n";
        }
        return 0;
      }
      if (ve_suite.empty() == ve_checks.empty()) throw UsageError("verify needs exactly one of --suite or --check");
      if (!ve_params.empty() && ve_checks.empty()) throw UsageError("--param applies to --check only");
      nlohmann::json header = {{"version", ASIGMA_VERSION}, {"seed", ve_seed}, {"budget", ve_budget}};
      std::vector<CheckOutcome> outcomes;
      if (!ve_suite.empty()) {
        std::vector<std::string> ids;
        try {
          ids = suite_checks(ve_suite);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        header["suite"] = ve_suite;
        header["checks"] = ids.size();
        out << header.dump() << "\n" << std::flush;
        outcomes = run_suite(ve_suite, ve_budget, ve_seed, ve_threads);
      } else {
        CheckParams params = {{"seed", ve_seed}};
        for (const auto& kv : ve_params) params.update(parse_param(kv));
        for (const auto& id : ve_checks) {
          if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
            throw UsageError("unknown check '" + id + "'");
          }
        }
        header["checks"] = ve_checks;
        out << header.dump() << "\n" << std::flush;
        for (const auto& id : ve_checks) {
          try {
            outcomes.push_back(run_check(id, params));
          } catch (const std::invalid_argument& e) {
            throw UsageError(id + ": " + e.what());
          }
        }
      }
      int failed = 0;
      for (const auto& o : outcomes) {
        out << to_json(o).dump() << "\n";
        failed += o.status == CheckStatus::fail;
      }
      return failed ? 1 : 0;
    }
    if (candidates->parsed()) {
      std::vector<CandidateRow> rows;
      try {
        rows = candidate_rows(ca_n, ca_refined);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      for (const auto& row : rows) {
        out << nlohmann::json{{"shape", to_string(row.shape)}, {"counts", row.counts}, {"t", row.t},
                              {"lp", row.lp}, {"graph6", to_graph6(build_row(row))}}
                   .dump()
            << "\n";
      }
      return 0;
    }
    if (census->parsed()) {
      if (cs_export->parsed()) {
        if (std::filesystem::exists(cs_path) && std::filesystem::equivalent(cs_path, cs_store)) {
          throw UsageError("export target is the store itself");
        }
        CensusLoad load = census_load(cs_store);
        for (const auto& w : load.warnings) err << "warning: " << w << "\n";
        if (std::filesystem::exists(cs_path)) std::filesystem::remove(cs_path);
        census_store(load.entries, cs_path);
        out << nlohmann::json{{"exported", load.entries.size()}, {"path", cs_path}}.dump() << "\n";
      } else {
        CensusLoad load = census_load(cs_path);
        for (const auto& w : load.warnings) err << "warning: " << w << "\n";
        census_store(load.entries, cs_store);
        out << nlohmann::json{{"imported", load.entries.size()}, {"store", cs_store}}.dump() << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cin, std::cout, std::cerr);
}

}  // namespace asigma
