#include "mgfix_cli/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mgfix/axioms.hpp"
#include "mgfix/contraction.hpp"
#include "mgfix/corpus.hpp"
#include "mgfix/picard.hpp"
#include "mgfix/serialize.hpp"

namespace mgfix::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fixture;
  std::string config;
  std::string condition = "root";
  std::string region;
  std::string mode = "root";
  std::optional<double> eta;
  std::optional<double> gamma;
  std::optional<double> x0;
  double epsilon = 1e-6;
  std::size_t max_iter = 10000;
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  std::string format = "json";
};

// Human summaries use 5 significant digits.
std::string r5(double v) {
  std::ostringstream os;
  os.precision(5);
  os << v;
  return os.str();
}

std::string csv_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

NamedFixture resolve_fixture(const Options& o) {
  if (o.fixture.empty() == o.config.empty()) {
    throw UsageError("exactly one of --fixture or --config is required");
  }
  NamedFixture f = [&] {
    if (!o.config.empty()) return load_fixture_file(o.config);
    auto found = find_fixture(o.fixture);
    if (!found) {
      std::string known;
      for (const auto& r : registry()) known += (known.empty() ? "" : ", ") + r.id;
      throw UsageError("unknown fixture '" + o.fixture + "' (known: " + known + ")");
    }
    return *found;
  }();

  if (o.eta || o.gamma || o.x0) {
    if (!f.params && !(o.eta && o.gamma && o.x0)) {
      throw UsageError("fixture '" + f.id + "' has no parameters; pass --eta, --gamma and --x0");
    }
    ContractionParams p = f.params.value_or(ContractionParams{});
    if (o.eta) p.eta = *o.eta;
    if (o.gamma) p.gamma = *o.gamma;
    if (o.x0) {
      if (!Point::is_carrier(*o.x0)) throw UsageError("--x0 must be finite and >= 0");
      p.seed_point = Point(*o.x0);
    }
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    f.params = p;
  }
  return f;
}

void require_map_and_params(const NamedFixture& f) {
  if (!f.map) throw UsageError("fixture '" + f.id + "' has no self-map");
  if (!f.params) throw UsageError("fixture '" + f.id + "' has no parameters");
}

Interval parse_interval(const std::string& text) {
  auto parsed = Interval::parse(text);
  if (!parsed) throw UsageError("bad --region '" + text + "': expected lo:hi with lo <= hi");
  return *parsed;
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

int cmd_axioms(const Options& o, std::ostream& out, std::ostream& err) {
  const NamedFixture f = resolve_fixture(o);
  Interval domain = Interval::closed(0.0, 10.0);
  if (!o.region.empty()) {
    if (o.region == "ball") throw UsageError("axioms takes --region lo:hi, not ball");
    domain = parse_interval(o.region);
  }
  const std::size_t n = o.n.value_or(1000);

  std::vector<AxiomReport> reports;
  try {
    if (f.base_metric) reports.push_back(check_mult_axioms(*f.base_metric, domain, n, o.seed));
    reports.push_back(check_gm_axioms(f.space, domain, n, o.seed));
    reports.push_back(check_gm_consequences(f.space, domain, n, o.seed));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();

  if (o.format == "csv") {
    out << "suite,id,status,checks,violations\n";
    for (const auto& r : reports) {
      for (const auto& a : r.axioms) {
        out << r.suite << ',' << a.id << ',' << (a.passed() ? "pass" : "fail") << ',' << a.checks
            << ',' << a.violations << '\n';
      }
    }
  } else {
    ordered_json doc;
    doc["command"] = "axioms";
    doc["fixture"] = f.id;
    doc["verdict"] = ok ? "pass" : "fail";
    doc["reports"] = ordered_json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    emit(out, doc);
  }

  for (const auto& r : reports) {
    err << r.suite << " on " << r.domain.to_string() << ": ";
    std::string failed;
    for (const auto& a : r.axioms) {
      if (!a.passed()) failed += (failed.empty() ? "" : ", ") + a.id;
    }
    err << (failed.empty() ? "all axioms pass" : "FAILED " + failed) << '\n';
    for (const auto& a : r.axioms) {
      if (a.witnesses.empty()) continue;
      const Witness& w = a.witnesses.front();
      err << "  " << a.id << " witness (";
      for (std::size_t i = 0; i < w.points.size(); ++i) {
        err << (i ? ", " : "") << r5(w.points[i].value());
      }
      err << "): lhs " << r5(w.lhs) << " vs rhs " << r5(w.rhs) << '\n';
    }
  }
  return ok ? kExitOk : kExitViolated;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const NamedFixture f = resolve_fixture(o);
  require_map_and_params(f);
  const Condition condition = *parse_condition(o.condition);
  const std::string region_text = o.region.empty() ? "ball" : o.region;
  const Region region =
      region_text == "ball" ? Region::ball() : Region::interval(parse_interval(region_text));

  const CertificateReport report =
      certify_region(f.space, *f.map, *f.params, condition, region, o.n.value_or(10000), o.seed);
  const bool ok = report.holds_on_sample() && report.seed_condition;

  if (o.format == "csv") {
    out << "x,y,z,lhs_log,rhs_log\n";
    for (const auto& w : report.witnesses) {
      out << csv_num(w.x.value()) << ',' << csv_num(w.y.value()) << ',' << csv_num(w.z.value())
          << ',' << csv_num(w.lhs) << ',' << csv_num(w.rhs) << '\n';
    }
  } else {
    ordered_json doc;
    doc["command"] = "certify";
    doc["fixture"] = f.id;
    doc["verdict"] = ok ? "holds" : "violated";
    doc["report"] = to_json(report);
    emit(out, doc);
  }

  err << "certify " << f.id << " (" << to_string(condition) << ") on " << report.region
      << ", sampled " << report.sampled.to_string() << ": " << report.violations
      << " violations in " << report.triples_checked << " triples\n";
  if (!report.witnesses.empty()) {
    const auto& w = report.witnesses.front();
    err << "  witness (" << r5(w.x.value()) << ", " << r5(w.y.value()) << ", " << r5(w.z.value())
        << "): lhs log " << r5(w.lhs) << " > bound log " << r5(w.rhs) << '\n';
  }
  err << "  seed condition " << (report.seed_condition ? "holds" : "FAILS") << ": log "
      << r5(report.seed_log) << " vs " << r5(report.seed_bound_log) << '\n';
  return ok ? kExitOk : kExitViolated;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const NamedFixture f = resolve_fixture(o);
  require_map_and_params(f);
  SolveOptions options;
  options.mode = *parse_condition(o.mode);
  options.epsilon = o.epsilon;
  options.max_iter = o.max_iter;
  options.allow_uncertified = true;
  if (!(o.epsilon > 0.0)) throw UsageError("--epsilon must be > 0");

  const FixedPointResult r = solve_fixed_point(f.space, *f.map, numeric_order(), *f.params, options);
  const bool uncertified = !r.certified_bound.has_value();

  if (o.format == "csv") {
    out << trace_csv(r.trace);
  } else {
    ordered_json doc;
    doc["command"] = "solve";
    doc["fixture"] = f.id;
    doc["mode"] = std::string(to_string(options.mode));
    doc["epsilon"] = options.epsilon;
    doc["rate_status"] = uncertified ? "uncertified-rate" : "certified";
    doc["result"] = to_json(r);
    emit(out, doc);
  }

  err << "solve " << f.id << " (" << to_string(options.mode) << "): x* = " << r5(r.point.value())
      << " after " << r.iterations_used << " iterations";
  if (r.certified_bound) err << " (a-priori bound " << *r.certified_bound << ")";
  err << ", residual log " << r5(r.residual_log.log) << '\n';
  if (uncertified) {
    err << "  WARNING: uncertified rate: mu = " << r5(r.mu->mu) << " >= 1, no a-priori bound\n";
  }
  if (r.left_ball) err << "  WARNING: the orbit left the closed ball around x0\n";
  if (!r.order_certified) err << "  note: the orbit is not monotone under " << numeric_order().description << '\n';
  return kExitOk;
}

int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  constexpr double kTolerance = 1e-3;
  struct Row {
    std::string quantity;
    double computed;
    double reference;
  };

  const auto seed_distance = [](const char* id) {
    const NamedFixture f = *find_fixture(id);
    const Point x0 = f.params->seed_point;
    const Point fx0 = (*f.map)(x0);
    return f.space(x0, fx0, fx0).multiplicative();
  };
  const NamedFixture quarter = *find_fixture("ex33");
  const std::vector<Row> rows{
      {"(1-eta)*gamma, ex33", (1.0 - quarter.params->eta) * quarter.params->gamma, 2.0625},
      {"G(x0,Fx0,Fx0), ex33", seed_distance("ex33"), 1.9477},
      {"G(x0,Fx0,Fx0), ex37", seed_distance("ex37"), 1.3956},
  };

  bool ok = true;
  if (o.format == "csv") out << "quantity,computed,reference,abs_diff,within_tolerance\n";
  ordered_json table = ordered_json::array();
  for (const Row& row : rows) {
    const double diff = std::abs(row.computed - row.reference);
    const bool within = diff <= kTolerance;
    ok = ok && within;
    if (o.format == "csv") {
      out << '"' << row.quantity << "\"," << csv_num(row.computed) << ',' << csv_num(row.reference)
          << ',' << csv_num(diff) << ',' << (within ? "true" : "false") << '\n';
    } else {
      table.push_back({{"quantity", row.quantity},
                       {"computed", row.computed},
                       {"reference", row.reference},
                       {"abs_diff", diff},
                       {"within_tolerance", within}});
    }
    err << row.quantity << ": " << r5(row.computed) << " vs " << r5(row.reference)
        << "  |diff| = " << r5(diff) << (within ? "" : "  OUT OF TOLERANCE") << '\n';
  }
  if (o.format != "csv") {
    ordered_json doc;
    doc["command"] = "reproduce";
    doc["tolerance"] = kTolerance;
    doc["verdict"] = ok ? "pass" : "fail";
    doc["rows"] = std::move(table);
    emit(out, doc);
  }
  return ok ? kExitOk : kExitViolated;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_config:
    case ErrorCode::empty_region:
      return kExitUsage;
    default:
      return kExitViolated;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Multiplicative G-metric fixed-point toolkit"};
  app.name("mgfix");
  app.require_subcommand(1, 1);

  const auto add_source = [&](CLI::App* sub) {
    auto* fx = sub->add_option("--fixture", o.fixture, "Built-in fixture id");
    auto* cf = sub->add_option("--config", o.config, "JSON fixture file");
    fx->excludes(cf);
  };
  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--eta", o.eta, "Contraction constant override");
    sub->add_option("--gamma", o.gamma, "Ball radius override");
    sub->add_option("--x0", o.x0, "Seed point override");
  };
  const auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of random samples");
    sub->add_option("--seed", o.seed, "RNG seed");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* axioms = app.add_subcommand("axioms", "Check metric axioms on sampled points");
  add_source(axioms);
  add_sampling(axioms);
  add_format(axioms);
  axioms->add_option("--region", o.region, "Domain lo:hi (default 0:10)");

  auto* certify = app.add_subcommand("certify", "Sample a contraction condition on a region");
  add_source(certify);
  add_params(certify);
  add_sampling(certify);
  add_format(certify);
  certify->add_option("--condition", o.condition, "root | implicit")
      ->check(CLI::IsMember({"root", "implicit"}));
  certify->add_option("--region", o.region, "lo:hi or ball (default ball)");

  auto* solve = app.add_subcommand("solve", "Run certified Picard iteration");
  add_source(solve);
  add_params(solve);
  add_format(solve);
  solve->add_option("--mode", o.mode, "root | implicit")->check(CLI::IsMember({"root", "implicit"}));
  solve->add_option("--epsilon", o.epsilon, "Residual tolerance");
  solve->add_option("--max-iter", o.max_iter, "Iteration cap");

  auto* reproduce = app.add_subcommand("reproduce", "Compare computed reference values");
  add_format(reproduce);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n' << "run 'mgfix --help' for usage\n";
    return kExitUsage;
  }

  std::string command = "unknown";
  try {
    if (axioms->parsed()) {
      command = "axioms";
      return cmd_axioms(o, out, err);
    }
    if (certify->parsed()) {
      command = "certify";
      return cmd_certify(o, out, err);
    }
    if (solve->parsed()) {
      command = "solve";
      return cmd_solve(o, out, err);
    }
    command = "reproduce";
    return cmd_reproduce(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    if (code == kExitViolated && o.format == "json") {
      ordered_json doc;
      doc["command"] = command;
      doc["verdict"] = "failed";
      doc["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
      if (e.index()) doc["error"]["index"] = *e.index();
      emit(out, doc);
    }
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mgfix::cli
