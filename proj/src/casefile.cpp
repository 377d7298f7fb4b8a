#include "rade/casefile.hpp"

#include <fstream>
#include <sstream>

namespace rade {

case_parse_error::case_parse_error(const std::string& msg, int line)
    : std::runtime_error("case file line " + std::to_string(line) + ": " + msg), line(line) {}

namespace {

void set_bounds(std::vector<CoordBounds>& v, int coord, double lo, double hi, int line) {
  if (coord < 1) throw case_parse_error("coordinate index must be >= 1", line);
  if (lo > hi) throw case_parse_error("lower bound exceeds upper bound", line);
  if (v.size() < static_cast<std::size_t>(coord)) v.resize(coord);
  v[coord - 1] = {lo, hi};
}

}  // namespace

CaseSpec parse_case_text(const std::string& text) {
  CaseSpec cs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_threshold = false, have_target = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string dir;
    if (!(ls >> dir)) continue;
    try {
      if (dir == "threshold") {
        std::string v;
        ls >> v;
        cs.threshold = parse_surd(v);
        have_threshold = true;
      } else if (dir == "target") {
        std::string v;
        ls >> v;
        cs.target = parse_rational(v);
        have_target = true;
      } else if (dir == "depth") {
        if (!(ls >> cs.depth) || cs.depth < 1)
          throw case_parse_error("depth must be a positive integer", lineno);
      } else if (dir == "grid") {
        int d;
        while (ls >> d) {
          if (d < 1) throw case_parse_error("grid values must be >= 1", lineno);
          cs.grid_schedule.push_back(d);
        }
        if (cs.grid_schedule.empty()) throw case_parse_error("grid needs at least one value", lineno);
      } else if (dir == "constraint") {
        LinearConstraint c;
        std::string tok;
        bool seen_lt = false;
        while (ls >> tok) {
          if (tok == "<") {
            seen_lt = true;
            std::string bound;
            if (!(ls >> bound)) throw case_parse_error("constraint missing bound", lineno);
            c.c = parse_surd(bound).to_double();
            break;
          }
          if (tok != "1" && tok != "-1" && tok != "0")
            throw case_parse_error("constraint coefficients must be -1, 0, or 1", lineno);
          c.lambda.push_back(std::stoi(tok));
        }
        if (!seen_lt) throw case_parse_error("constraint missing '<'", lineno);
        std::string tag;
        if (ls >> tag) {
          if (tag.empty() || tag[0] != '@')
            throw case_parse_error("constraint provenance must start with '@'", lineno);
          c.provenance = tag.substr(1);
        }
        cs.constraints.push_back(std::move(c));
      } else if (dir == "prior" || dir == "expect-envelope") {
        int coord;
        double lo, hi;
        if (!(ls >> coord >> lo >> hi))
          throw case_parse_error("expected: " + dir + " <coord> <low> <high>", lineno);
        set_bounds(dir == "prior" ? cs.priors : cs.expect_envelope, coord, lo, hi, lineno);
      } else {
        throw case_parse_error("unknown directive '" + dir + "'", lineno);
      }
    } catch (const case_parse_error&) {
      throw;
    } catch (const std::exception& e) {
      throw case_parse_error(e.what(), lineno);
    }
  }
  if (!have_threshold) throw case_parse_error("missing 'threshold' directive", lineno);
  if (!have_target) throw case_parse_error("missing 'target' directive", lineno);
  if (cs.depth < 1) throw case_parse_error("missing 'depth' directive", lineno);
  if (cs.grid_schedule.empty()) cs.grid_schedule.push_back(10);
  return cs;
}

CaseSpec load_case_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open case file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_case_text(buf.str());
}

}  // namespace rade
