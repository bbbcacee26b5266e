#include "mgfix/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace mgfix {

using nlohmann::ordered_json;

namespace {

ordered_json points_json(const std::vector<Point>& points) {
  ordered_json arr = ordered_json::array();
  for (Point p : points) arr.push_back(p.value());
  return arr;
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ordered_json to_json(const Interval& interval) {
  ordered_json j;
  j["lo"] = interval.lo;
  j["hi"] = std::isfinite(interval.hi) ? ordered_json(interval.hi) : ordered_json(nullptr);
  j["lo_closed"] = interval.lo_closed;
  j["hi_closed"] = interval.hi_closed;
  j["text"] = interval.to_string();
  return j;
}

ordered_json to_json(const AxiomReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["subject"] = report.subject;
  j["domain"] = to_json(report.domain);
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["verdict"] = report.passed() ? "pass" : "fail";
  ordered_json axioms = ordered_json::array();
  for (const AxiomStatus& a : report.axioms) {
    ordered_json entry;
    entry["id"] = a.id;
    entry["statement"] = a.statement;
    entry["status"] = a.passed() ? "pass" : "fail";
    entry["checks"] = a.checks;
    entry["violations"] = a.violations;
    ordered_json witnesses = ordered_json::array();
    for (const Witness& w : a.witnesses) {
      witnesses.push_back({{"points", points_json(w.points)}, {"lhs_log", w.lhs}, {"rhs_log", w.rhs}});
    }
    entry["witnesses"] = std::move(witnesses);
    axioms.push_back(std::move(entry));
  }
  j["axioms"] = std::move(axioms);
  return j;
}

ordered_json to_json(const CertificateReport& report) {
  ordered_json j;
  j["condition"] = std::string(to_string(report.condition));
  j["region"] = report.region;
  j["sampled"] = to_json(report.sampled);
  j["eta"] = report.eta;
  j["m"] = report.m;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["triples_checked"] = report.triples_checked;
  j["verdict"] = report.holds_on_sample() ? "holds-on-sample" : "violated";
  j["violations"] = report.violations;
  ordered_json witnesses = ordered_json::array();
  for (const ContractionWitness& w : report.witnesses) {
    witnesses.push_back({{"triple", {w.x.value(), w.y.value(), w.z.value()}},
                         {"lhs_log", w.lhs},
                         {"rhs_log", w.rhs}});
  }
  j["witnesses"] = std::move(witnesses);
  j["seed_condition"] = {{"holds", report.seed_condition},
                         {"lhs_log", report.seed_log},
                         {"rhs_log", report.seed_bound_log}};
  return j;
}

ordered_json to_json(const PicardTrace& trace) {
  ordered_json j;
  j["iterates"] = points_json(trace.iterates);
  ordered_json steps = ordered_json::array();
  for (LogDistance s : trace.step_logs) steps.push_back(s.log);
  j["step_logs"] = std::move(steps);
  ordered_json flags = ordered_json::array();
  for (bool b : trace.in_ball) flags.push_back(b);
  j["in_ball"] = std::move(flags);
  j["monotone"] = trace.monotone;
  return j;
}

ordered_json to_json(const FixedPointResult& result) {
  ordered_json j;
  j["point"] = result.point.value();
  j["residual_log"] = result.residual_log.log;
  j["iterations_used"] = result.iterations_used;
  j["certified_bound"] = result.certified_bound ? ordered_json(*result.certified_bound)
                                                : ordered_json(nullptr);
  j["rate"] = result.rate;
  if (result.mu) {
    j["mu"] = {{"value", result.mu->mu}, {"range", std::string(to_string(result.mu->range))}};
  } else {
    j["mu"] = nullptr;
  }
  j["left_ball"] = result.left_ball;
  j["order_certified"] = result.order_certified;
  j["trace"] = to_json(result.trace);
  return j;
}

std::string trace_csv(const PicardTrace& trace) {
  std::string out = "index,value,step_log,in_ball\n";
  for (std::size_t j = 0; j < trace.iterates.size(); ++j) {
    out += std::to_string(j);
    out += ',';
    out += g17(trace.iterates[j].value());
    out += ',';
    if (j < trace.step_logs.size()) out += g17(trace.step_logs[j].log);
    out += ',';
    out += trace.in_ball[j] ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace mgfix
