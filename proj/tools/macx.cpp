// macx: doubling, moment-angle complex Betti numbers and toral-rank checks.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "macx/complex_json.hpp"
#include "macx/cubical_model.hpp"
#include "macx/doubling.hpp"
#include "macx/error.hpp"
#include "macx/hochster.hpp"
#include "macx/trc_verifier.hpp"

namespace {

constexpr int kExitFlagsFailed = 1;
constexpr int kExitError = 2;

void emit(const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump() << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw macx::Error(macx::ErrorCode::ParseError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubling operation and moment-angle complex homology"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;

  auto* dbl = app.add_subcommand("double", "Write the double L(K) of a complex");
  dbl->add_option("--in", in_path, "input complex (JSON)")->required()->check(CLI::ExistingFile);
  dbl->add_option("--out", out_path, "output file; stdout if omitted");

  std::string model;
  bool full_table = false;
  std::uint64_t budget = macx::kDefaultCellBudget;
  auto* betti = app.add_subcommand("betti", "Rational Betti numbers of RZ_K or Z_K");
  betti->add_option("--model", model, "rzk (cubical model) or zk (Hochster decomposition)")
      ->required()
      ->check(CLI::IsMember({"rzk", "zk"}));
  betti->add_option("--in", in_path, "input complex (JSON)")->required()->check(CLI::ExistingFile);
  betti->add_flag("--full-table", full_table, "with --model zk, list every (omega, p) summand");
  betti->add_option("--budget", budget, "cell budget for the cubical model");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run the toral-rank checks on one complex");
  verify->add_option("--in", in_path, "input complex (JSON)")->required()->check(CLI::ExistingFile);
  verify->add_option("--report", report_path, "report file; stdout if omitted");

  macx::CorpusOptions corpus_options;
  auto* corpus = app.add_subcommand("corpus", "Run the toral-rank checks over a corpus");
  corpus->add_option("--max-m", corpus_options.max_m, "exhaustive enumeration for m = 1..max-m")
      ->check(CLI::Range(0, macx::kMaxEnumerationVertices));
  corpus->add_option("--random", corpus_options.random_count, "random complexes per value of --m")
      ->check(CLI::NonNegativeNumber);
  corpus->add_option("--m", corpus_options.random_ms, "vertex counts for random complexes")
      ->check(CLI::Range(1, macx::kMaxRandomVertices));
  corpus->add_option("--density", corpus_options.density, "face probability for random complexes");
  corpus->add_option("--seed", corpus_options.seed, "first seed; item i uses seed + i");
  corpus->add_option("--workers", corpus_options.workers, "worker threads (0: hardware concurrency)");
  corpus->add_option("--report", report_path, "report file; stdout if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*dbl) {
      const macx::SimplicialComplex K = macx::read_complex(in_path);
      const nlohmann::json doubled = macx::complex_to_json(macx::double_complex(K));
      if (out_path.empty()) {
        std::cout << doubled.dump() << '\n';
      } else {
        std::ofstream out(out_path);
        if (!out) throw macx::Error(macx::ErrorCode::ParseError, "cannot write " + out_path);
        out << doubled.dump() << '\n';
      }
      return 0;
    }

    if (*betti) {
      const macx::SimplicialComplex K = macx::read_complex(in_path);
      nlohmann::json out;
      out["model"] = model;
      if (model == "rzk") {
        const macx::BettiTable table = macx::betti_rzk(K, budget);
        out["betti"] = macx::betti_to_json(table);
        out["hrk"] = table.hrk();
      } else {
        const macx::HochsterTable table = macx::hochster_table(K);
        out["betti"] = macx::betti_to_json(table.graded());
        out["hrk"] = table.hrk();
        if (full_table) out["table"] = macx::hochster_to_json(table);
      }
      std::cout << out.dump() << '\n';
      return 0;
    }

    if (*verify) {
      const macx::SimplicialComplex K = macx::read_complex(in_path);
      const macx::TrcReport report = macx::check_trc(K, in_path);
      emit(macx::verification_to_json(report), report_path);
      return report.flags.all() ? 0 : kExitFlagsFailed;
    }

    if (*corpus) {
      if (corpus_options.random_count > 0 && corpus_options.random_ms.empty()) {
        throw macx::Error(macx::ErrorCode::InvalidParameter, "--random needs at least one --m");
      }
      const macx::CorpusReport report = macx::run_corpus(corpus_options);
      emit(macx::corpus_to_json(report), report_path);
      std::size_t failed = 0;
      for (const auto& r : report.reports) failed += r.flags.all() ? 0 : 1;
      std::cerr << report.reports.size() << " complexes checked, " << failed << " failed\n";
      return failed == 0 ? 0 : kExitFlagsFailed;
    }
  } catch (const macx::Error& e) {
    std::cerr << "macx: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
