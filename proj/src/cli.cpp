#include "cyclocode/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "cyclocode/bounds.hpp"
#include "cyclocode/defsets.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/galois.hpp"
#include "cyclocode/grid_spec.hpp"
#include "cyclocode/oracle.hpp"
#include "cyclocode/parallel.hpp"
#include "cyclocode/report.hpp"

namespace cyclocode {

namespace {

Value num(const Natural& x) { return x; }
Value num(std::uint64_t x) { return Natural(x); }

void add_params(Report& r, const CodeParams& p) {
  r.add("q", num(p.q));
  r.add("m", num(p.m));
  r.add("t", num(p.t));
  r.add("a", num(p.a));
  r.add("b", num(p.b));
}

std::vector<Value> param_cells(const CodeParams& p) {
  return {num(p.q), num(p.m), num(p.t), num(p.a), num(p.b)};
}

std::string join(const std::vector<std::uint64_t>& xs, std::size_t limit = SIZE_MAX) {
  std::string s;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  if (xs.size() > limit) s += " ...";
  return s;
}

std::string grid_form(const TranslateGrid& g) {
  if (g.axes.empty()) return "empty";
  std::ostringstream os;
  for (std::size_t i = 0; i < g.axes.size(); ++i) {
    const auto& ax = g.axes[i];
    if (i) os << " + ";
    os << ax.weight << "*[" << ax.lo << ".." << ax.lo + ax.count - 1 << "]";
  }
  if (g.exclude_origin) os << " minus 0";
  return os.str();
}

struct Outcome {
  Report report;
  int status = kExitOk;
};

struct ParamArgs {
  unsigned q = 0, m = 0, t = 0, a = 0, b = 0;
  CodeParams params() const { return {q, m, t, a, b}; }
};

void bind_params(CLI::App* cmd, ParamArgs& pa) {
  cmd->add_option("--q", pa.q, "base field size (prime power)")->required();
  cmd->add_option("--m", pa.m, "extension degree")->required();
  cmd->add_option("--t", pa.t, "trailing zero run of u, 0 <= t <= m-1")->required();
  cmd->add_option("--a", pa.a, "digit cap, 1 <= a <= q-1")->required();
  cmd->add_option("--b", pa.b, "head cap, 1 <= b <= q-1")->required();
}

Outcome cmd_dim(const CodeParams& p, bool verify, std::ostream& err) {
  const auto r = dimension(p);
  Outcome o;
  Report& rep = o.report;
  rep.command = "dim";
  rep.csv_table = -1;
  add_params(rep, p);
  rep.add("length", num(r.length));
  rep.add("extended_length", num(r.length + 1));
  rep.add("size_T", num(r.size_T));
  rep.add("dimension", num(r.dimension));
  rep.add("is_bch", r.is_bch);
  rep.add("designed_distance", r.is_bch ? num(r.designed_distance) : Value{});
  if (verify) {
    const auto materialized = materialized_dimension(p);
    const auto field = FieldContext::make(p.q, p.m);
    const auto from_generator = Natural(brute_dimension(field, brute_T(p)));
    rep.add("verified_materialized", num(materialized));
    rep.add("verified_generator_degree", num(from_generator));
    const bool ok = materialized == r.dimension && from_generator == r.dimension;
    rep.add("verify_status", std::string(ok ? "ok" : "mismatch"));
    if (!ok) {
      err << "dimension mismatch for " << to_string(p) << ": closed form " << r.dimension
          << ", materialized " << materialized << ", n - deg g " << from_generator << '\n';
      o.status = kExitMismatch;
    }
  }
  Table t{"classes", {"k", "ell", "A", "B"}, {}};
  for (const auto& c : r.classes) t.rows.push_back({num(c.pair.k), num(c.pair.ell), num(c.matrix_entries), num(c.class_size)});
  rep.tables.push_back(std::move(t));
  return o;
}

Outcome cmd_size_t(const CodeParams& p) {
  const auto rows = class_breakdown(p);
  Outcome o;
  Report& rep = o.report;
  rep.command = "size-t";
  add_params(rep, p);
  rep.add("size_T", num(closed_size_T(p)));
  Table t{"breakdown", {"k", "ell", "A", "B"}, {}};
  for (const auto& c : rows) t.rows.push_back({num(c.pair.k), num(c.pair.ell), num(c.matrix_entries), num(c.class_size)});
  rep.tables.push_back(std::move(t));
  return o;
}

Outcome cmd_coset(unsigned q, unsigned m, std::uint64_t s) {
  if (!is_prime_power(q)) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  const auto c = coset_of(s, q, m);
  Outcome o;
  Report& rep = o.report;
  rep.command = "coset";
  rep.csv_table = -1;
  rep.add("q", num(q));
  rep.add("m", num(m));
  rep.add("s", num(s));
  rep.add("leader", num(c.leader));
  rep.add("size", num(c.size()));
  rep.add("elements", join(c.elements));
  return o;
}

void add_verdict(Report& rep, const BoundCertificate& cert, const CertificateVerdict& v, const Natural& stated) {
  rep.add("z", num(cert.z));
  rep.add("S_size", num(cert.s_size));
  rep.add("S", cert.enumerated ? join(cert.s_set, 1000) : std::string("not enumerated"));
  rep.add("S_form", grid_form(cert.grid));
  rep.add("claimed_bound", num(cert.claimed_bound));
  rep.add("verified", v.passed());
  rep.add("zero_free", v.zero_free);
  rep.add("prefix_ok", v.prefix_ok);
  rep.add("translates_ok", v.translates_ok);
  rep.add("gcd_ok", v.gcd_ok);
  rep.add("gap_ok", v.gap_ok);
  rep.add("sampled", v.sampled);
  rep.add("certified_bound", v.certified_bound ? num(*v.certified_bound) : Value{});
  rep.add("mismatch", v.certified_bound ? num(stated - Natural(*v.certified_bound)) : Value{});
  rep.add("failure", v.failure.empty() ? Value{} : Value{v.failure});
}

Outcome cmd_bound(const CodeParams& p, bool certificate) {
  Outcome o;
  Report& rep = o.report;
  rep.command = "bound";
  rep.csv_table = -1;
  add_params(rep, p);
  const auto c = classify_case(p);
  const auto stated = stated_bound(p);
  rep.add("case", num(case_number(c)));
  rep.add("condition", std::string(case_condition(c)));
  rep.add("v", num(max_zero_prefix(p)));
  rep.add("stated_bound", num(stated));
  if (certificate) {
    const auto cert = build_certificate(p);
    add_verdict(rep, cert, verify_certificate(cert, p), stated);
  }
  return o;
}

std::string row_status(const AuditRow& row) {
  if (row.verified_ok()) return row.verdict.sampled ? "ok (sampled)" : "ok";
  return "fail: " + row.verdict.failure;
}

struct GridRow {
  CodeParams params;
  std::optional<AuditRow> row;
  std::string skipped;
};

std::vector<GridRow> audit_points(const std::vector<CodeParams>& points) {
  std::vector<GridRow> rows(points.size());
  parallel_for(points.size(), [&](std::uint64_t i) {
    rows[i].params = points[i];
    try {
      rows[i].row = audit(points[i]);
    } catch (const ResourceError& e) {
      rows[i].skipped = e.what();
    }
  });
  return rows;
}

Outcome cmd_audit(const std::string& grid) {
  const auto points = expand_grid(parse_grid(grid), Regime::dual);
  const auto rows = audit_points(points);
  Outcome o;
  Report& rep = o.report;
  rep.command = "audit";
  rep.add("grid", grid);
  rep.add("points", num(points.size()));
  Table all{"rows", {"q", "m", "t", "a", "b", "case", "v", "stated", "certified", "mismatch", "S_size", "z", "status"}, {}};
  Table findings{"findings", {"q", "m", "t", "a", "b", "case", "stated", "certified", "mismatch", "note"}, {}};
  std::uint64_t verified = 0;
  for (const auto& g : rows) {
    auto cells = param_cells(g.params);
    if (!g.row) {
      cells.insert(cells.end(), {Value{}, Value{}, Value{}, Value{}, Value{}, Value{}, Value{}, "skipped: " + g.skipped});
      all.rows.push_back(std::move(cells));
      continue;
    }
    const auto& r = *g.row;
    verified += r.verified_ok();
    const Value certified = r.certified ? num(*r.certified) : Value{};
    const Value mismatch = r.mismatch ? num(*r.mismatch) : Value{};
    cells.insert(cells.end(), {num(case_number(r.case_id)), num(r.v), num(r.stated), certified, mismatch,
                               num(r.s_size), num(r.z), row_status(r)});
    all.rows.push_back(std::move(cells));
    const bool off = r.mismatch && *r.mismatch != 0;
    if (off || !r.verified_ok()) {
      auto f = param_cells(g.params);
      std::string note = !r.verified_ok() ? "certificate failed: " + r.verdict.failure
                         : *r.mismatch > 0 ? "stated bound exceeds the certified bound"
                                           : "stated bound below the certified bound";
      f.insert(f.end(), {num(case_number(r.case_id)), num(r.stated), certified, mismatch, note});
      findings.rows.push_back(std::move(f));
    }
  }
  rep.add("verified", num(verified));
  rep.add("finding_count", num(findings.rows.size()));
  rep.tables.push_back(std::move(all));
  rep.tables.push_back(std::move(findings));
  return o;
}

Outcome cmd_table(const std::string& preset, bool certify) {
  if (preset != "table2") throw ParameterError("unknown preset '" + preset + "' (available: table2)");
  const unsigned q = 5, m = 10, a = 4;
  std::vector<CodeParams> points;
  for (unsigned t = 8; t >= 2; --t)
    for (unsigned b = 1; b <= 4; ++b) points.push_back({q, m, t, a, b});
  std::vector<GridRow> audited;
  if (certify) audited = audit_points(points);

  Outcome o;
  Report& rep = o.report;
  rep.command = "table";
  rep.add("preset", preset);
  rep.add("q", num(q));
  rep.add("m", num(m));
  rep.add("a", num(a));
  Table t{"rows", {"t", "b", "delta", "case", "bound"}, {}};
  if (certify) t.columns.insert(t.columns.end(), {"v", "S_size", "certified", "mismatch", "status"});
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const Natural delta = Natural(p.b + 1) * pow_natural(q, m - p.t - 1);
    std::vector<Value> row{num(p.t), num(p.b), num(delta), num(case_number(classify_case(p))), num(stated_bound(p))};
    if (certify) {
      const auto& g = audited[i];
      if (g.row) {
        const auto& r = *g.row;
        row.insert(row.end(), {num(r.v), num(r.s_size), r.certified ? num(*r.certified) : Value{},
                               r.mismatch ? num(*r.mismatch) : Value{}, row_status(r)});
      } else {
        row.insert(row.end(), {Value{}, Value{}, Value{}, Value{}, "skipped: " + g.skipped});
      }
    }
    t.rows.push_back(std::move(row));
  }
  rep.tables.push_back(std::move(t));
  return o;
}

Outcome cmd_gen_poly(unsigned q, unsigned m, std::uint64_t delta) {
  const auto field = FieldContext::make(q, m);
  const auto d = bch_set(q, m, delta);
  const auto g = generator_polynomial(field, d);
  Outcome o;
  Report& rep = o.report;
  rep.command = "gen-poly";
  rep.add("q", num(q));
  rep.add("m", num(m));
  rep.add("delta", num(delta));
  rep.add("length", num(field.n()));
  rep.add("degree", num(static_cast<std::uint64_t>(g.degree())));
  rep.add("dimension", num(field.n() - static_cast<std::uint64_t>(g.degree())));
  std::vector<std::uint64_t> coeffs(g.coeffs.begin(), g.coeffs.end());
  rep.add("coefficients", join(coeffs));
  Table t{"coefficients", {"power", "coefficient"}, {}};
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) t.rows.push_back({num(i), num(g.coeffs[i])});
  rep.tables.push_back(std::move(t));
  rep.csv_table = 0;
  return o;
}

Outcome cmd_verify(std::uint64_t max_n, std::uint64_t seed, std::ostream& err) {
  const auto tallies = run_oracle_suite(max_n, seed);
  Outcome o;
  Report& rep = o.report;
  rep.command = "verify";
  rep.add("max_n", num(max_n));
  rep.add("seed", num(seed));
  Table t{"checks", {"check", "points", "passed", "failed"}, {}};
  std::uint64_t failed = 0;
  for (const auto& c : tallies) {
    t.rows.push_back({c.name, num(c.points), num(c.passed), num(c.failures.size())});
    failed += c.failures.size();
    for (const auto& f : c.failures) err << "mismatch [" << c.name << "] " << f << '\n';
  }
  rep.add("status", std::string(failed ? "mismatch" : "ok"));
  rep.tables.push_back(std::move(t));
  if (failed) o.status = kExitMismatch;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine-invariant code calculator: defining sets, dimensions, dual-distance bounds."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", out_path, "write the report to this file instead of standard output");

  ParamArgs pa;
  bool verify = false, certificate = false, certify = false;
  unsigned cq = 0, cm = 0;
  std::uint64_t cs = 0, delta = 0, max_n = 0, seed = kDefaultSeed;
  std::string grid, preset;

  auto* dim = app.add_subcommand("dim", "dimension of C_T and C_T*");
  bind_params(dim, pa);
  dim->add_flag("--verify", verify, "cross-check against materialized T and the generator degree");
  auto* size = app.add_subcommand("size-t", "|T| and its class breakdown");
  bind_params(size, pa);
  auto* coset = app.add_subcommand("coset", "cyclotomic coset of s modulo q^m - 1");
  coset->add_option("--q", cq, "radix")->required();
  coset->add_option("--m", cm, "length")->required();
  coset->add_option("--s", cs, "element in [0, q^m - 1]")->required();
  auto* bound = app.add_subcommand("bound", "dual minimum-distance bound");
  bind_params(bound, pa);
  bound->add_flag("--certificate", certificate, "build and verify the (z, S) certificate");
  auto* aud = app.add_subcommand("audit", "certified vs stated bounds over a parameter grid");
  aud->add_option("--grid", grid, "grid specification, e.g. 'q=2..5;m=2..8;t=*;a=*;b<=a'")->required();
  aud->footer("Grid grammar (EBNF):\n" + std::string(kGridGrammar));
  auto* table = app.add_subcommand("table", "reproduce a published table");
  table->add_option("--preset", preset, "table2 (q = 5, m = 10)")->required();
  table->add_flag("--certify", certify, "also build and verify every certificate");
  auto* ver = app.add_subcommand("verify", "run every oracle cross-check for q^m <= N");
  ver->add_option("--max-n", max_n, "largest q^m to cover")->required();
  ver->add_option("--seed", seed, "seed for randomized probes");
  auto* gen = app.add_subcommand("gen-poly", "generator polynomial of the narrow-sense BCH code");
  gen->add_option("--q", cq, "base field size")->required();
  gen->add_option("--m", cm, "extension degree")->required();
  gen->add_option("--delta", delta, "designed distance, 2 <= delta <= q^m - 1")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    Outcome o;
    if (dim->parsed()) o = cmd_dim(pa.params(), verify, err);
    else if (size->parsed()) o = cmd_size_t(pa.params());
    else if (coset->parsed()) o = cmd_coset(cq, cm, cs);
    else if (bound->parsed()) o = cmd_bound(pa.params(), certificate);
    else if (aud->parsed()) o = cmd_audit(grid);
    else if (table->parsed()) o = cmd_table(preset, certify);
    else if (ver->parsed()) o = cmd_verify(max_n, seed, err);
    else o = cmd_gen_poly(cq, cm, delta);

    const auto text = render(o.report, parse_format(format));
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file || !(file << text)) throw ResourceError("cannot write " + out_path);
    }
    return o.status;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace cyclocode
