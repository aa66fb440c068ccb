// gwfloor: enumeration dumps, symbolic counts, wall-crossing reports and
// verification suites.  JSON on stdout unless --table is given.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gwfloor/json_io.hpp"
#include "gwfloor/suites.hpp"

using namespace gwfloor;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  bool table = false;
  std::string out;
  std::size_t budget = 0;
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot open " + g.out);
  f << text;
}

std::string dump(const json& j) { return with_schema(j).dump(2) + "\n"; }

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == '/' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

MergeConfiguration make_cfg(int d, const std::vector<int>& positions) {
  MergeConfiguration c{marked_points(d), positions};
  if (!is_valid(c)) throw UsageError("invalid merge positions " + to_string(c) + " for degree " + std::to_string(d));
  return c;
}

FieldModel parse_field(const std::string& f) {
  if (f == "real") return RealField{};
  if (f == "closed") return ClosedField{};
  if (f.rfind("fq:", 0) == 0) {
    const std::string q = f.substr(3);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(q.data(), q.data() + q.size(), value);
    if (ec != std::errc{} || end != q.data() + q.size()) throw UsageError("bad field order: " + q);
    try {
      return FiniteField(value);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad field: ") + e.what());
    }
  }
  throw UsageError("unknown field " + f);
}

Assignment parse_signs(const std::string& s, int vars) {
  Assignment a;
  for (char c : s) {
    if (c == '+') a.push_back(0);
    else if (c == '-') a.push_back(1);
    else if (c != ',' && c != ' ') throw UsageError("--signs expects + and - characters");
  }
  if (static_cast<int>(a.size()) != vars) throw UsageError("--signs needs one sign per merged pair");
  return a;
}

Assignment parse_assign(const std::string& s, int vars) {
  Assignment a;
  for (const auto& t : split_tokens(s)) {
    if (t == "sq") a.push_back(0);
    else if (t == "ns") a.push_back(1);
    else throw UsageError("--assign expects sq or ns tokens");
  }
  if (static_cast<int>(a.size()) != vars) throw UsageError("--assign needs one class per merged pair");
  return a;
}

int cmd_enumerate(const Global& g, int d, const std::vector<int>& merge, bool merged) {
  if (d < 1 || d > 4) throw UsageError("--degree must lie in 1..4");
  std::ostringstream table;
  json items = json::array();
  if (merged) {
    auto cfg = make_cfg(d, merge);
    for (const auto& md : enumerate_merged_diagrams(d, cfg, g.budget)) {
      auto mult = diagram_multiplicity(md, cfg.pairs());
      json j = to_json(md);
      j["multiplicity"] = to_json(mult);
      items.push_back(j);
      table << to_json(md.marked)["marking"].dump() << "  " << to_string(mult) << "\n";
    }
  } else {
    const auto& all = enumerate_diagrams(d);
    if (g.budget && all.size() > g.budget) throw BudgetExceeded("enumeration exceeds the budget");
    for (const auto& M : all) {
      items.push_back(to_json(M));
      table << to_json(M)["marking"].dump() << "\n";
    }
  }
  if (g.table) emit(g, table.str() + std::to_string(items.size()) + " diagrams\n");
  else emit(g, dump({{"d", d}, {"count", items.size()}, {"diagrams", items}}));
  return kExitPass;
}

int cmd_count(const Global& g, int d, int pairs, const std::vector<int>& merge, const std::string& field,
              const std::string& signs, const std::string& assign, const std::vector<std::int64_t>& values) {
  if (d < 1 || d > 4) throw UsageError("--degree must lie in 1..4");
  auto cfg = make_cfg(d, merge);
  const int s = cfg.pairs();
  if (pairs >= 0 && pairs != s) throw UsageError("--pairs does not match the number of merge positions");
  auto count = floor_count(d, cfg, g.budget);
  json j = {{"d", d}, {"s", s}, {"merge", to_json(cfg)}, {"rank", count.rank().value()}};
  std::string text;
  if (field == "symbolic") {
    j["count"] = to_json(count);
    text = to_string(count) + "\n";
  } else {
    auto model = parse_field(field);
    Assignment a(static_cast<std::size_t>(s), 0);
    if (!values.empty()) {
      if (static_cast<int>(values.size()) != s) throw UsageError("--values needs one value per merged pair");
      try {
        a = assignment_from_values(model, values);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (!signs.empty()) {
      if (!std::holds_alternative<RealField>(model)) throw UsageError("--signs applies to --field real");
      a = parse_signs(signs, s);
    } else if (!assign.empty()) {
      if (!std::holds_alternative<FiniteField>(model)) throw UsageError("--assign applies to --field fq:Q");
      a = parse_assign(assign, s);
    }
    auto v = specialize_field(count, model, a);
    j["field"] = model_name(model);
    j["assign"] = assignment_string(model, a);
    j["value"] = to_json(v, model);
    text = model_name(model) + " [" + assignment_string(model, a) + "]: " + j["value"].dump() + "\n";
  }
  emit(g, g.table ? text : dump(j));
  return kExitPass;
}

int cmd_wallcross(const Global& g, int d, const std::vector<int>& from, const std::vector<int>& to, int pairs,
                  const std::string& sweep) {
  if (d < 1 || d > 4) throw UsageError("--degree must lie in 1..4");
  if (sweep != "default") throw UsageError("only --sweep default is supported");
  std::vector<std::pair<MergeConfiguration, MergeConfiguration>> jobs;
  if (pairs >= 0) {
    jobs = unit_shifts(marked_points(d), pairs);
  } else {
    auto a = make_cfg(d, from), b = make_cfg(d, to);
    if (a.pairs() != b.pairs()) throw UsageError("--merge-from and --merge-to must have the same number of pairs");
    jobs.emplace_back(a, b);
  }
  json reports = json::array();
  std::ostringstream table;
  bool ok = true;
  for (const auto& [a, b] : jobs) {
    auto r = wallcross_report(d, a, b, default_sweep(a.pairs()), g.budget);
    auto res = residual_report(d, a, b, g.budget);
    json j = to_json(r);
    j["residual"] = to_json(res);
    reports.push_back(j);
    ok = ok && r.passed() && res.passed();
    table << (r.passed() && res.passed() ? "PASS " : "FAIL ") << to_string(a) << " -> " << to_string(b)
          << "  n1=" << r.coords.n1 << " n2=" << r.coords.n2 << " m=" << r.coords.m << "\n";
  }
  emit(g, g.table ? table.str() : dump({{"d", d}, {"reports", reports}, {"pass", ok}}));
  return ok ? kExitPass : kExitFail;
}

int cmd_pfister(const Global& g, int s) {
  if (s < 0 || s > 12) throw UsageError("--vars must lie in 0..12");
  auto form = pfister_concrete(s);
  auto v = is_anisotropic(form);
  json j = {{"s", s}, {"form", to_json(form, s)}, {"verdict", verdict_name(v)}, {"element", to_json(pfister_element(s))}};
  std::string text = "Pfister form of rank " + std::to_string(form.rank()) + ": " + verdict_name(v) + "\n";
  emit(g, g.table ? text : dump(j));
  return v == Verdict::Anisotropic ? kExitPass : kExitFail;
}

int cmd_verify(const Global& g, const std::string& suite, unsigned jobs, bool timings) {
  SuiteResult r;
  try {
    r = run_suite(suite, {jobs == 0 ? 1 : jobs, g.budget});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (g.table) {
    std::ostringstream t;
    for (const auto& c : r.checks) {
      t << (c.pass ? "PASS " : "FAIL ") << c.id;
      if (!c.pass && !c.detail.empty()) t << "  (" << c.detail << ")";
      if (timings) t << "  " << c.elapsed_ms << " ms";
      t << "\n";
    }
    t << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks)\n";
    emit(g, t.str());
  } else {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json j = {{"id", c.id}, {"pass", c.pass}};
      if (!c.pass) j["detail"] = c.detail;
      if (timings) j["elapsed_ms"] = c.elapsed_ms;
      checks.push_back(j);
    }
    json body = {{"suite", r.name}, {"pass", r.pass}, {"count", r.checks.size()}};
    if (const auto* f = r.first_failure()) body["first_failure"] = f->id;
    body["checks"] = checks;
    emit(g, dump(body));
  }
  if (const auto* f = r.first_failure()) std::cerr << "first failing check: " << f->id << "\n";
  return r.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratically enriched floor-diagram counts and merge-position invariance checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--table", g.table, "Human-readable output instead of JSON");
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.add_option("--budget", g.budget, "Maximum number of marked diagrams to examine (0 = unlimited)");

  int degree = 0, pairs = -1, vars = 0;
  unsigned jobs = 1;
  std::vector<int> merge, merge_from, merge_to;
  std::string field = "symbolic", signs, assign, sweep = "default", suite;
  std::vector<std::int64_t> values;
  bool json_flag = false, merged = false, timings = false;

  auto* en = app.add_subcommand("enumerate", "List marked floor diagrams of a degree");
  en->add_option("--degree", degree, "Degree d (1..4)")->required();
  en->add_flag("--json", json_flag, "JSON output (default)");
  en->add_option("--merge", merge, "Merge positions; lists classified merged diagrams")->delimiter(',');
  en->add_flag("--merged", merged, "Classify under --merge (implied by --merge)");

  auto* co = app.add_subcommand("count", "Symbolic or field-specialised floor count");
  co->add_option("--degree", degree, "Degree d (1..4)")->required();
  co->add_option("--pairs", pairs, "Number of merged pairs s (checked against --merge)");
  co->add_option("--merge", merge, "Merge positions p1,p2,... (1-based, gap >= 2)")->delimiter(',');
  co->add_option("--field", field, "symbolic | real | closed | fq:Q")->capture_default_str();
  co->add_option("--signs", signs, "Real signs of d_1..d_s, e.g. +-");
  co->add_option("--assign", assign, "F_q square classes of d_1..d_s, e.g. sq,ns");
  co->add_option("--values", values, "Concrete nonzero values d_1..d_s")->delimiter(',');

  auto* wc = app.add_subcommand("wallcross", "Wall-crossing report for a unit shift");
  wc->add_option("--degree", degree, "Degree d (1..4)")->required();
  wc->add_option("--merge-from", merge_from, "Source merge positions")->delimiter(',');
  wc->add_option("--merge-to", merge_to, "Target merge positions")->delimiter(',');
  wc->add_option("--pairs", pairs, "Sweep every unit shift with s pairs instead");
  wc->add_option("--sweep", sweep, "Field sweep (default: real all signs, fq 5/7/11/13, closed)")
      ->capture_default_str();

  auto* pf = app.add_subcommand("pfister", "Pfister form and its Springer anisotropy verdict");
  pf->add_option("--vars", vars, "Number of Laurent variables s")->required();

  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_help = "all";
  for (const auto& n : suite_names()) suite_help += " | " + n;
  ve->add_option("--suite", suite, suite_help)->required();
  ve->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  ve->add_flag("--timings", timings, "Include per-check elapsed times (output is then not reproducible)");

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
    if (*en) return cmd_enumerate(g, degree, merge, merged || !merge.empty());
    if (*co) return cmd_count(g, degree, pairs, merge, field, signs, assign, values);
    if (*wc) {
      if (pairs < 0 && (merge_from.empty() && merge_to.empty()))
        throw UsageError("give --merge-from/--merge-to or --pairs");
      return cmd_wallcross(g, degree, merge_from, merge_to, pairs, sweep);
    }
    if (*pf) return cmd_pfister(g, vars);
    if (*ve) return cmd_verify(g, suite, jobs, timings);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
