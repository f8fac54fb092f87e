#include "capdist/cli/commands.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "capdist/bijections.hpp"
#include "capdist/closed_forms.hpp"
#include "capdist/composition.hpp"
#include "capdist/genfunc.hpp"
#include "capdist/recurrences.hpp"
#include "capdist/verifier.hpp"

namespace capdist::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_range(int value, int lo, int hi, const std::string& what) {
  if (value < lo || value > hi) {
    throw UsageError(what + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(value));
  }
}

// One CSV record per monomial: prefix columns, then exponents and coefficient.
void poly_csv_rows(std::ostream& os, const std::string& prefix, const TriPoly& poly) {
  for (const auto& [e, coef] : poly.terms()) {
    os << prefix << e.y << ',' << e.p << ',' << e.q << ',' << coef.get_str() << '\n';
  }
}

std::string orbit_trace(const Composition& c) {
  const InvolutionStep step = involution_map(c);
  if (!step.partner) return format_composition(c) + " (fixed)";
  const char* stage = step.kind == InvolutionKind::stage1 ? "stage 1" : "stage 2";
  return format_composition(c) + " -> " + format_composition(*step.partner) + " -> " + format_composition(c) +
         " (" + stage + ")";
}

}  // namespace

OutputDoc cmd_show(std::string_view composition, Format format) {
  const Composition c = parse_composition(composition);
  const StatProfile s = stats(c);
  const std::string compact = format_composition(c);
  const std::string sigma = s.sigma ? std::to_string(*s.sigma) : "undefined";
  std::optional<std::string> orbit;
  if (parts_in_one_two(c) && in_K(c)) orbit = orbit_trace(c);

  std::ostringstream os;
  switch (format) {
    case Format::text:
      os << "composition: " << compact << '\n'
         << "n: " << c.n() << '\n'
         << "capacity: " << s.capacity << '\n'
         << "tau: " << s.tau << '\n'
         << "mu: " << s.mu << '\n'
         << "sigma: " << sigma << '\n'
         << "sign: " << s.sign << '\n';
      if (orbit) os << "involution: " << *orbit << '\n';
      os << render_bargraph(c);
      break;
    case Format::json: {
      Json parts = Json::array();
      for (Part p : c.parts()) parts.push_back(p);
      Json j = {{"composition", compact}, {"parts", parts},     {"n", c.n()},   {"capacity", s.capacity},
                {"tau", s.tau},           {"mu", s.mu},         {"sigma", nullptr}, {"sign", s.sign}};
      if (s.sigma) j["sigma"] = *s.sigma;
      j["involution"] = orbit ? Json(*orbit) : Json(nullptr);
      j["bargraph"] = render_bargraph(c);
      os << dump(j);
      break;
    }
    case Format::csv:
      os << "composition,n,capacity,tau,mu,sigma,sign\n"
         << compact << ',' << c.n() << ',' << s.capacity << ',' << s.tau << ',' << s.mu << ','
         << (s.sigma ? std::to_string(*s.sigma) : "") << ',' << s.sign << '\n';
      break;
  }
  return {format, os.str()};
}

OutputDoc cmd_dist(int n, std::string_view vars, Format format) {
  TriPoly poly;
  if (vars == "y") {
    require_range(n, 0, kDistMaxY, "n");
    poly = b_seq_rec3(n)[n];
  } else if (vars == "ypq") {
    require_range(n, 0, kDistMaxYpq, "n");
    poly = bpq_seq(n).total[n];
  } else {
    throw UsageError("--vars must be y or ypq");
  }

  std::ostringstream os;
  switch (format) {
    case Format::text: os << to_text(poly) << '\n'; break;
    case Format::json:
      os << dump({{"n", n}, {"vars", vars}, {"text", to_text(poly)}, {"poly", to_json(poly)}});
      break;
    case Format::csv:
      os << "n,y,p,q,coef\n";
      poly_csv_rows(os, std::to_string(n) + ",", poly);
      break;
  }
  return {format, os.str()};
}

OutputDoc cmd_seq(std::string_view name, int n_max, Format format) {
  require_range(n_max, 0, kSeqMax, "--n-max");
  int first = 0;
  std::vector<BigInt> values;
  if (name == "fib") {
    for (int n = 0; n <= n_max; ++n) values.push_back(fib(n));
  } else if (name == "lucas") {
    first = 1;
    for (int n = 1; n <= n_max; ++n) values.push_back(lucas(n));
  } else if (name == "d") {
    values = d_seq_rec2(n_max);
  } else if (name == "w0") {
    for (int n = 0; n <= n_max; ++n) values.push_back(w0(n));
  } else if (name == "totcap") {
    for (int n = 0; n <= n_max; ++n) values.push_back(total_capacity(n));
  } else if (name == "signbal") {
    for (int n = 0; n <= n_max; ++n) values.push_back(sign_balance(n));
  } else {
    throw UsageError("unknown sequence '" + std::string(name) + "' (fib, lucas, d, w0, totcap, signbal)");
  }

  std::ostringstream os;
  switch (format) {
    case Format::text:
      for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i].get_str();
      os << '\n';
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const auto& v : values) arr.push_back(v.get_str());
      os << dump({{"name", name}, {"first", first}, {"values", arr}});
      break;
    }
    case Format::csv:
      os << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) os << first + static_cast<int>(i) << ',' << values[i].get_str() << '\n';
      break;
  }
  return {format, os.str()};
}

OutputDoc cmd_table(std::string_view stat, int n_max, Format format) {
  require_range(n_max, 0, kTableMax, "--n-max");
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  if (stat == "wnk") {
    header = {"n", "k", "value"};
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        rows.push_back({std::to_string(n), std::to_string(k), (k == 0 ? w0(n) : wnk(n, k)).get_str()});
      }
    }
  } else if (stat == "bnkj") {
    header = {"n", "k", "j", "value"};
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int j = std::max(k, n % 2); j <= n; ++j) {
          if ((n - j) % 2 != 0) continue;
          rows.push_back({std::to_string(n), std::to_string(k), std::to_string(j), bnkj(n, k, j).get_str()});
        }
      }
    }
  } else {
    throw UsageError("unknown table '" + std::string(stat) + "' (wnk, bnkj)");
  }

  std::ostringstream os;
  auto join = [&](const std::vector<std::string>& cells, char sep) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? std::string(1, sep) : "") << cells[i];
    os << '\n';
  };
  switch (format) {
    case Format::text:
      join(header, ' ');
      for (const auto& r : rows) join(r, ' ');
      break;
    case Format::csv:
      join(header, ',');
      for (const auto& r : rows) join(r, ',');
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json rec = Json::object();
        for (std::size_t i = 0; i < header.size(); ++i) {
          if (i + 1 == header.size()) {
            rec[header[i]] = r[i];
          } else {
            rec[header[i]] = std::stoi(r[i]);
          }
        }
        arr.push_back(rec);
      }
      os << dump({{"table", stat}, {"rows", arr}});
      break;
    }
  }
  return {format, os.str()};
}

VerifyOutcome cmd_verify(std::string_view suite, const VerifyOptions& options, Format format) {
  Bounds bounds;
  if (options.n_max) {
    if (*options.n_max < 0) throw UsageError("--n-max must be >= 0");
    bounds = bounds.capped(*options.n_max);
  }
  std::vector<VerifyReport> reports;
  if (suite == "all") {
    reports = run_all(bounds, std::max(1u, options.threads));
  } else {
    try {
      reports.push_back(run_suite(suite, bounds));
    } catch (const UnknownSuiteError& e) {
      throw UsageError(e.what());
    }
  }

  std::ostringstream os;
  switch (format) {
    case Format::text: {
      std::size_t failed = 0;
      for (const auto& r : reports) {
        os << (r.pass() ? "PASS " : "FAIL ") << r.suite << "  checks=" << r.checks << "  range=" << r.range;
        if (options.timing) os << "  " << r.elapsed.count() << "ms";
        os << '\n';
        constexpr std::size_t kShown = 10;
        for (std::size_t i = 0; i < std::min(kShown, r.failures.size()); ++i) {
          const auto& f = r.failures[i];
          os << "  " << f.params.dump() << " expected " << f.expected << " got " << f.actual << '\n';
        }
        if (r.failures.size() > kShown) os << "  ... " << r.failures.size() - kShown << " more\n";
        failed += !r.pass();
      }
      if (failed == 0) {
        os << "all " << reports.size() << " suite(s) passed\n";
      } else {
        os << failed << " of " << reports.size() << " suite(s) failed\n";
      }
      break;
    }
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r, options.timing));
      os << dump(arr);
      break;
    }
    case Format::csv:
      os << "suite,pass,checks,failures,ms\n";
      for (const auto& r : reports) {
        os << r.suite << ',' << (r.pass() ? "true" : "false") << ',' << r.checks << ',' << r.failures.size() << ','
           << (options.timing ? r.elapsed.count() : 0) << '\n';
      }
      break;
  }
  return {{format, os.str()}, verify_exit_code(reports)};
}

OutputDoc cmd_gf(std::string_view model, const GfOptions& options, Format format) {
  const GfModel* m = find_gf_model(model);
  if (!m) {
    std::string known;
    for (const auto& g : gf_registry()) known += (known.empty() ? "" : ", ") + g.name;
    throw UsageError("unknown model '" + std::string(model) + "' (" + known + ")");
  }
  require_range(options.n_max, 0, 512, "--n-max");
  if (m->needs_k && !options.k) throw UsageError(m->name + " requires --k");
  if (options.k && *options.k < 1) throw UsageError("--k must be >= 1");

  GfParams params;
  params.order = static_cast<std::size_t>(options.n_max);
  params.k = options.k.value_or(1);
  params.p_symbolic = options.p_symbolic;
  const XSeries s = m->build(params);

  std::ostringstream os;
  switch (format) {
    case Format::text:
      os << m->name << " = " << m->formula << '\n';
      for (std::size_t n = 0; n <= s.order(); ++n) os << "x^" << n << ": " << to_text(s[n]) << '\n';
      break;
    case Format::json: {
      Json coeffs = Json::array();
      for (std::size_t n = 0; n <= s.order(); ++n) {
        coeffs.push_back({{"n", n}, {"text", to_text(s[n])}, {"poly", to_json(s[n])}});
      }
      Json j = {{"model", m->name}, {"formula", m->formula}};
      if (m->needs_k) j["k"] = params.k;
      j["coefficients"] = coeffs;
      os << dump(j);
      break;
    }
    case Format::csv:
      os << "n,y,p,q,coef\n";
      for (std::size_t n = 0; n <= s.order(); ++n) poly_csv_rows(os, std::to_string(n) + ",", s[n]);
      break;
  }
  return {format, os.str()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity statistics on compositions with parts 1 and 2", "capdist"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats = {
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  Format format = Format::text;
  std::optional<int> n_max;
  int order = 64;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--n-max", n_max, "Upper index for sequences, tables, series and verification bounds");
  app.add_option("--order", order, "Series truncation order when --n-max is not given")->check(CLI::Range(0, 512));
  app.add_option("--threads", threads, "Worker threads for verify all")->check(CLI::PositiveNumber);

  std::string comp_text;
  auto* show = app.add_subcommand("show", "Statistics and bargraph of one composition");
  show->add_option("composition", comp_text, "e.g. 212 or 3,1,2")->required();

  int dist_n = 0;
  std::string vars = "y";
  auto* dist = app.add_subcommand("dist", "Distribution polynomial of B_n");
  dist->add_option("n", dist_n)->required();
  dist->add_option("--vars", vars, "y or ypq")->check(CLI::IsMember({"y", "ypq"}));

  std::string seq_name;
  auto* seq = app.add_subcommand("seq", "Integer sequence from index 0 to --n-max (default 20)");
  seq->add_option("name", seq_name, "fib, lucas, d, w0, totcap, signbal")->required();

  std::string table_name;
  auto* table = app.add_subcommand("table", "Rows (n,k[,j],value) up to --n-max (default 12)");
  table->add_option("stat", table_name, "wnk or bnkj")->required();

  std::string suite;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "suite name or all")->required();
  verify->add_flag("--no-timing", no_timing, "Report ms as 0 for reproducible output");

  std::string model;
  std::optional<int> k;
  bool p_symbolic = false;
  auto* gf = app.add_subcommand("gf", "Series coefficients x^0..x^N of a registered model");
  gf->add_option("model", model)->required();
  gf->add_option("--k", k, "Capacity index for gf.wk");
  gf->add_flag("--p-symbolic", p_symbolic, "Keep p symbolic in gf.totcap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "capdist: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    OutputDoc doc;
    int code = kExitPass;
    if (*show) {
      doc = cmd_show(comp_text, format);
    } else if (*dist) {
      doc = cmd_dist(dist_n, vars, format);
    } else if (*seq) {
      doc = cmd_seq(seq_name, n_max.value_or(20), format);
    } else if (*table) {
      doc = cmd_table(table_name, n_max.value_or(12), format);
    } else if (*verify) {
      VerifyOutcome outcome = cmd_verify(suite, {n_max, threads, !no_timing}, format);
      doc = std::move(outcome.doc);
      code = outcome.exit_code;
    } else if (*gf) {
      doc = cmd_gf(model, {n_max.value_or(order), k, p_symbolic}, format);
    }
    out << doc.payload;
    return code;
  } catch (const std::exception& e) {
    err << "capdist: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace capdist::cli
