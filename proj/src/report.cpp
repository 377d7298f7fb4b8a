#include "rade/report.hpp"

#include <fstream>
#include <sstream>

#include "rade/lemma_certs.hpp"
#include "rade/oracle.hpp"

namespace rade {

namespace {

// Each plateau's witness uses integer weights; the threshold is scaled by
// the witness's standard deviation so the exact oracle applies directly.
PlateauRow make_row(std::string interval, Rat value, int ones, const Surd& scaled_threshold,
                    std::string witness_desc, std::vector<std::string> cases) {
  PlateauRow row;
  row.interval = std::move(interval);
  row.value = std::move(value);
  row.witness = std::move(witness_desc);
  row.cases = std::move(cases);
  WeightVector w(std::vector<Rat>(ones, Rat(1)));
  row.witness_tail = tail_probability(w, scaled_threshold, TailQuery{false, true});
  row.witness_ok = row.witness_tail == row.value;
  return row;
}

}  // namespace

std::vector<PlateauRow> verify_plateau_witnesses() {
  std::vector<PlateauRow> rows;
  rows.push_back(make_row("y = 0", Rat(1), 2, Surd(Rat(0)), "(1/sqrt(2), 1/sqrt(2))", {}));
  rows.push_back(make_row("(0, 1/sqrt(7)]", Rat(1, 2), 2, Surd::sqrt_of(Rat(2, 7)),
                          "(1/sqrt(2), 1/sqrt(2))", {"sqrt7"}));
  rows.push_back(make_row("(1/sqrt(7), 1/sqrt(5)]", Rat(29, 64), 7, Surd::sqrt_of(Rat(7, 5)),
                          "(1/sqrt(7) x 7)", {"sqrt5"}));
  rows.push_back(make_row("(1/sqrt(5), 1/sqrt(3)]", Rat(3, 8), 5, Surd::sqrt_of(Rat(5, 3)),
                          "(1/sqrt(5) x 5)", {"sqrt3"}));
  rows.push_back(make_row("(1/sqrt(3), 2/sqrt(6)]", Rat(1, 4), 3, Surd::sqrt_of(Rat(2)),
                          "(1/sqrt(3) x 3)", {"2sqrt6"}));
  rows.push_back(make_row("(2/sqrt(6), 1]", Rat(7, 32), 6, Surd::sqrt_of(Rat(6)),
                          "(1/sqrt(6) x 6)",
                          {"A", "B", "C", "D", "E", "F", "G", "H"}));
  rows.push_back(make_row("(1, infinity)", Rat(0), 1, Surd(Rat(3, 2)), "(1)", {}));
  return rows;
}

std::string SummaryReport::text() const {
  std::ostringstream os;
  os << "step function inf P(|X| >= y) over unit-variance Rademacher sums\n";
  os << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n\n";
  for (const PlateauRow& r : rows) {
    os << "  " << r.interval << "  value " << to_string(r.value) << "  witness " << r.witness
       << " -> " << to_string(r.witness_tail) << (r.witness_ok ? " [ok]" : " [MISMATCH]");
    if (!r.cases.empty()) {
      os << "  certificates:";
      for (const std::string& id : r.cases) os << ' ' << id;
    }
    os << "\n";
  }
  os << "\ncertificates:\n";
  for (const auto& [id, ok] : case_status)
    os << "  " << id << ": " << (ok ? "PASS" : "FAIL") << "\n";
  return os.str();
}

SummaryReport build_summary(const std::string& case_dir) {
  SummaryReport rep;
  std::string missing;
  for (const std::string& id : all_case_ids()) {
    std::ifstream f(case_dir + "/" + id + ".json");
    if (!f) {
      missing += missing.empty() ? id : ", " + id;
      continue;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    rep.case_status.emplace_back(id, buf.str().find("\"passed\":true") != std::string::npos);
  }
  if (!missing.empty())
    throw std::runtime_error("missing case reports in " + case_dir + ": " + missing);
  rep.rows = verify_plateau_witnesses();
  rep.all_passed = true;
  for (const PlateauRow& r : rep.rows) rep.all_passed = rep.all_passed && r.witness_ok;
  for (const auto& [id, ok] : rep.case_status) rep.all_passed = rep.all_passed && ok;
  return rep;
}

}  // namespace rade
