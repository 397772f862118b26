#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hv/claims.hpp"
#include "hv/error.hpp"
#include "hv/lemmas.hpp"
#include "hv/linalg.hpp"
#include "hv/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of horospherical VMRT and cohomology claims"};
  app.require_subcommand(1);

  std::string family = "all", pattern = "*", format = "json", out;
  unsigned threads = 0;
  std::size_t prime_budget = 0;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run registered claims");
  verify->add_option("--family", family, "b3, b4, b5, f4, a comma list, or all");
  verify->add_option("--claims", pattern, "Glob pattern on claim ids");
  verify->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--out", out, "Write the report to this file");
  verify->add_option("--threads", threads, "Worker threads (default HOROVMRT_THREADS or 1)");
  verify->add_option("--prime-budget", prime_budget, "Primes tried by the modular rank check");
  verify->add_flag("--timing", timing, "Record elapsed_ms (output is then not byte-stable)");

  auto* compute = app.add_subcommand("compute", "Compute a single invariant");
  compute->require_subcommand(1);
  std::string h2_family;
  int degree = 0;
  auto* h2 = compute->add_subcommand("h2", "H^2 of the negative part with values in the whole algebra");
  h2->add_option("--family", h2_family, "b3, b4, b5 or f4")->required();
  h2->add_option("--degree", degree, "Degree k")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (prime_budget > 0) hv::linalg_config().prime_budget = prime_budget;
      if (threads == 0) {
        const char* env = std::getenv("HOROVMRT_THREADS");
        threads = env ? static_cast<unsigned>(std::strtoul(env, nullptr, 10)) : 1;
        if (threads == 0) threads = 1;
      }
      hv::RunOptions opts;
      opts.cases = hv::parse_families(family);
      opts.pattern = pattern;
      opts.threads = threads;
      opts.timing = timing;
      auto results = hv::run_claims(opts);
      std::string doc = format == "md" ? hv::emit_markdown(results) : hv::emit_json(results);
      if (out.empty()) {
        std::cout << doc;
      } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw hv::Error("IO_ERROR", "cannot open " + out);
        f << doc;
      }
      return hv::any_failed(results) ? 1 : 0;
    }
    auto ids = hv::parse_families(h2_family);
    if (ids.size() != 1) throw hv::Error("INVALID_ARGUMENT", "compute h2 takes one family");
    auto cc = hv::get_complexes(ids.front());
    std::cout << hv::cohomology_json(cc->m_g->cohomology(2, degree));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
