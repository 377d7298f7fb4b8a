#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rade/box_search.hpp"
#include "rade/casefile.hpp"
#include "rade/dp_table.hpp"
#include "rade/lemma_certs.hpp"
#include "rade/oracle.hpp"
#include "rade/prawitz.hpp"
#include "rade/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;

struct Scale {
  int beta_den;
  int iterations;
};

Scale scale_of(const std::string& name) {
  if (name == "desk") return {200, 50};
  if (name == "paper") return {2000, 1000};
  throw CLI::ValidationError("--scale", "must be 'desk' or 'paper'");
}

std::string table_cache_dir() {
  if (const char* env = std::getenv("RADECHECK_TABLE_DIR")) return env;
  return ".";
}

std::string default_table_path(const Scale& s) {
  return table_cache_dir() + "/table-" + std::to_string(s.beta_den) + ".dpt";
}

rade::DPGrid obtain_table(const std::string& path, const Scale& s) {
  if (std::filesystem::exists(path)) return rade::load(path, s.beta_den);
  if (s.beta_den != 200)
    std::cerr << "warning: building a 1/" << s.beta_den
              << " table from scratch; this is an hours-long computation\n";
  rade::DPGridSpec spec;
  spec.beta_den = s.beta_den;
  rade::DPGrid grid = rade::build_initial(spec);
  rade::refine(grid, s.iterations);
  rade::persist(grid, path);
  return grid;
}

// Runs every round of the case's grid schedule, feeding each envelope
// back as the next prior.
rade::SearchResult run_case_search(const rade::CaseSpec& cs, const rade::DPGrid& table) {
  rade::SearchConfig cfg;
  cfg.s = cs.threshold.to_double();
  cfg.p = rade::to_double(cs.target);
  cfg.k = cs.depth;
  std::vector<rade::CoordBounds> prior = cs.priors;
  rade::SearchResult res;
  for (std::size_t round = 0; round < cs.grid_schedule.size(); ++round) {
    cfg.d = cs.grid_schedule[round];
    res = rade::search(cfg, table, cs.constraints, prior);
    if (res.boxes.empty() || !res.conclusive) break;
    prior = res.envelope;
  }
  return res;
}

std::string describe_search(const rade::SearchResult& res) {
  std::ostringstream os;
  os << "tested " << res.stats.tested << ", discarded " << res.stats.discarded
     << ", constraint-pruned " << res.stats.pruned_constraint << ", surviving "
     << res.stats.survived << (res.conclusive ? "" : " [INCONCLUSIVE: budget exhausted]") << "\n";
  for (std::size_t i = 0; i < res.envelope.size(); ++i)
    os << "  a" << i + 1 << " in [" << res.envelope[i].lo << ", " << res.envelope[i].hi << "]\n";
  return os.str();
}

// Returns pass/fail/inconclusive for a finished search against the
// case's expected envelope.
int judge_search(const rade::CaseSpec& cs, const rade::SearchResult& res, std::ostream& out) {
  if (!res.conclusive) return kExitInconclusive;
  for (std::size_t i = 0; i < cs.expect_envelope.size() && i < res.envelope.size(); ++i) {
    const auto& want = cs.expect_envelope[i];
    const auto& got = res.envelope[i];
    if (got.lo < want.lo || got.hi > want.hi) {
      out << "envelope for a" << i + 1 << " [" << got.lo << ", " << got.hi
          << "] exceeds expected [" << want.lo << ", " << want.hi << "]\n";
      return kExitFail;
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for the Rademacher tail step function"};
  app.set_config("--config");
  app.require_subcommand(1);

  // ---- oracle ----------------------------------------------------------
  std::string ow, ox, ox_sq;
  bool ostrict = false, otwo = false;
  auto* oracle = app.add_subcommand("oracle", "exact tail probability of a rational weight vector");
  oracle->add_option("--w", ow, "comma-separated weights")->required();
  auto* xopt = oracle->add_option("--x", ox, "threshold (rational or r*sqrt(m) form)");
  oracle->add_option("--x-sq", ox_sq, "threshold given as its square (rational)")->excludes(xopt);
  oracle->add_flag("--strict", ostrict, "P(X > x) instead of P(X >= x)");
  oracle->add_flag("--two-sided", otwo, "P(|X| >= x)");

  // ---- prawitz ---------------------------------------------------------
  double pa = 0.5, px = 0.0, pT = 4.0, pq = 0.5;
  int ppanels = 32;
  auto* prawitz = app.add_subcommand("prawitz", "certified lower bound on P(X >= x)");
  prawitz->add_option("--a", pa, "upper bound on the largest weight")->required();
  prawitz->add_option("--x", px, "threshold")->required();
  prawitz->add_option("--T", pT, "frequency cutoff");
  prawitz->add_option("--q", pq, "integral split point");
  prawitz->add_option("--panels", ppanels, "quadrature subdivisions");

  // ---- dp build / query ------------------------------------------------
  auto* dp = app.add_subcommand("dp", "lower-bound table operations");
  dp->require_subcommand(1);
  int dbeta = 200, diters = 50;
  std::string dout, dtable;
  double da = 0.5, dx = 1.0;
  auto* dbuild = dp->add_subcommand("build", "build and persist a table");
  dbuild->add_option("--beta-den", dbeta, "grid granularity denominator");
  dbuild->add_option("--iters", diters, "refinement iterations");
  dbuild->add_option("--out", dout, "output path (default: cache dir)");
  auto* dquery = dp->add_subcommand("query", "query a persisted table");
  dquery->add_option("--table", dtable, "table path")->required();
  dquery->add_option("--a", da, "largest-weight bound")->required();
  dquery->add_option("--x", dx, "threshold")->required();

  // ---- search ----------------------------------------------------------
  std::string scase, stable, sout;
  auto* searchcmd = app.add_subcommand("search", "branch-and-prune over a declarative case file");
  searchcmd->add_option("--case", scase, "case file")->required()->check(CLI::ExistingFile);
  searchcmd->add_option("--table", stable, "table path (default: desk cache)");
  searchcmd->add_option("--out", sout, "write the report here as well");

  // ---- reproduce -------------------------------------------------------
  std::string rcase, rscale = "desk", rout = "reports", rcasedir = "cases";
  auto* reproduce = app.add_subcommand("reproduce", "re-run one scripted case end to end");
  reproduce->add_option("case", rcase, "case id (A..H, sqrt7, sqrt5, sqrt3, 2sqrt6)")
      ->required()
      ->check(CLI::IsMember(rade::all_case_ids()));
  reproduce->add_option("--scale", rscale, "desk (fast) or paper (hours-long table build)");
  reproduce->add_option("--out", rout, "report output directory");
  reproduce->add_option("--case-dir", rcasedir, "directory with search case files");

  // ---- report ----------------------------------------------------------
  std::string repdir = "reports";
  auto* report = app.add_subcommand("report", "consolidated step-function summary");
  report->add_option("--dir", repdir, "directory containing <id>.json case reports");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*oracle) {
      rade::WeightVector w = rade::WeightVector::parse(ow);
      rade::Surd x = !ox.empty()       ? rade::parse_surd(ox)
                     : !ox_sq.empty()  ? rade::Surd::sqrt_of(rade::parse_rational(ox_sq))
                                       : rade::Surd(rade::Rat(0));
      rade::Rat p = rade::tail_probability(w, x, rade::TailQuery{ostrict, otwo});
      std::cout << rade::to_string(p) << " (= " << rade::to_double(p) << ")\n";
      return kExitPass;
    }
    if (*prawitz) {
      double b = rade::prawitz_lower_bound(pa, px, rade::PrawitzParams{pT, pq, ppanels});
      std::cout << b << "\n";
      return kExitPass;
    }
    if (*dp) {
      if (*dbuild) {
        Scale s{dbeta, diters};
        if (dout.empty()) dout = default_table_path(s);
        rade::DPGridSpec spec;
        spec.beta_den = dbeta;
        rade::DPGrid grid = rade::build_initial(spec);
        rade::RefineStats st = rade::refine(grid, diters);
        rade::persist(grid, dout);
        std::cout << "wrote " << dout << " after " << st.iterations
                  << " refinement passes (last gain " << st.last_gain << ")\n";
      } else {
        rade::DPGrid grid = rade::load(dtable);
        std::cout << grid.query(da, dx) << "\n";
      }
      return kExitPass;
    }
    if (*searchcmd) {
      rade::CaseSpec cs = rade::load_case_file(scase);
      Scale s = scale_of("desk");
      if (stable.empty()) stable = default_table_path(s);
      rade::DPGrid table = obtain_table(stable, s);
      rade::SearchResult res = run_case_search(cs, table);
      std::string text = describe_search(res);
      std::cout << text;
      if (!sout.empty()) std::ofstream(sout) << text;
      return judge_search(cs, res, std::cout);
    }
    if (*reproduce) {
      rade::CaseReport rep = rade::run_case(rcase);
      std::cout << rep.text();
      std::filesystem::create_directories(rout);
      std::ofstream(rout + "/" + rcase + ".json") << rep.json() << "\n";
      int status = rep.passed ? kExitPass : kExitFail;
      std::string case_file = rcasedir + "/" + rcase + "-" + rscale + ".case";
      if (status == kExitPass && std::filesystem::exists(case_file)) {
        Scale s = scale_of(rscale);
        rade::DPGrid table = obtain_table(default_table_path(s), s);
        rade::CaseSpec cs = rade::load_case_file(case_file);
        rade::SearchResult res = run_case_search(cs, table);
        std::cout << "search round:\n" << describe_search(res);
        status = judge_search(cs, res, std::cout);
      }
      std::cout << (status == kExitPass          ? "PASS"
                    : status == kExitInconclusive ? "INCONCLUSIVE"
                                                  : "FAIL")
                << "\n";
      return status;
    }
    if (*report) {
      rade::SummaryReport sum = rade::build_summary(repdir);
      std::cout << sum.text();
      return sum.all_passed ? kExitPass : kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitFail;
}
