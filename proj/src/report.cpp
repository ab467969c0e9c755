#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "horn/harness.hpp"

namespace horn {

namespace {

using nlohmann::json;

std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("?");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json witness_json(const Witness& w) {
  const IdentityCheckOutcome& o = w.outcome;
  json j = {{"draw_index", w.draw_index},
            {"params", std::vector<double>(w.instance.params.values().begin(),
                                           w.instance.params.values().end())},
            {"point", {w.instance.point.x, w.instance.point.y}},
            {"free", w.instance.free},
            {"t", w.instance.t},
            {"pass", o.pass}};
  if (o.error.empty()) {
    j["lhs"] = o.lhs;
    j["rhs"] = o.rhs;
    j["abs_err"] = o.abs_err;
    j["rel_err"] = o.rel_err;
    j["bound"] = o.bound;
  } else {
    j["error"] = o.error;
  }
  if (o.fd_value) {
    j["fd_value"] = *o.fd_value;
    j["fd_rel_err"] = *o.fd_rel_err;
  }
  return j;
}

json identity_json(const IdentityReport& r) {
  json j = {{"identity_id", r.identity_id},
            {"paper_anchor", r.paper_anchor},
            {"family", std::string(to_string(r.family))},
            {"function", std::string(to_string(r.function))},
            {"registry_status", std::string(to_string(r.registry_status))},
            {"open_question", r.open_question},
            {"samples_planned", r.samples_planned},
            {"samples_run", r.samples_run},
            {"samples_passed", r.samples_passed},
            {"evaluation_errors", r.evaluation_errors},
            {"skipped", r.skipped},
            {"max_rel_err", r.max_rel_err},
            {"mean_rel_err", r.mean_rel_err},
            {"status", std::string(to_string(r.status))}};
  j["worst_witness"] = r.worst_witness ? witness_json(*r.worst_witness) : json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& report, int indent) {
  const SamplePlan& p = report.plan;
  json meta = {{"seed", p.seed},
               {"config_hash", report.config_hash},
               {"n_samples", p.n_samples},
               {"param_range", {p.param_range.lo, p.param_range.hi}},
               {"exclusion_margin", p.exclusion_margin},
               {"point_shrink", p.point_shrink},
               {"k_values", p.k_values},
               {"s_values", p.s_values},
               {"t_range", {p.t_range.lo, p.t_range.hi}},
               {"R", p.R}};
  if (report.wall_time_s) meta["wall_time_s"] = *report.wall_time_s;

  json rows = json::array();
  json discrepancies = json::array();
  for (const IdentityReport& r : report.identities) {
    rows.push_back(identity_json(r));
    if (r.samples_passed < r.samples_run) {
      discrepancies.push_back({{"identity_id", r.identity_id},
                               {"paper_anchor", r.paper_anchor},
                               {"status", std::string(to_string(r.status))},
                               {"open_question", r.open_question},
                               {"samples_failed", r.samples_run - r.samples_passed},
                               {"samples_run", r.samples_run},
                               {"witness", witness_json(*r.worst_witness)}});
    }
  }
  json doc = {{"metadata", meta},
              {"summary",
               {{"identities", report.identities.size()},
                {"verified", report.count(VerificationStatus::VERIFIED)},
                {"disputed", report.count(VerificationStatus::DISPUTED)},
                {"skipped", report.count(VerificationStatus::SKIPPED)}}},
              {"identities", rows},
              {"discrepancies", discrepancies}};
  return doc.dump(indent);
}

std::string report_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "identity_id,family,function,status,open_question,samples_run,samples_passed,"
        "max_rel_err,mean_rel_err,paper_anchor,reason\n";
  for (const IdentityReport& r : report.identities) {
    os << csv_field(r.identity_id) << ',' << to_string(r.family) << ',' << to_string(r.function)
       << ',' << to_string(r.status) << ',' << (r.open_question ? "true" : "false") << ','
       << r.samples_run << ',' << r.samples_passed << ',' << shortest(r.max_rel_err) << ','
       << shortest(r.mean_rel_err) << ',' << csv_field(r.paper_anchor) << ','
       << csv_field(r.reason) << '\n';
  }
  return os.str();
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream os;
  std::size_t width = 12;
  for (const auto& r : report.identities) width = std::max(width, r.identity_id.size());
  for (const IdentityReport& r : report.identities) {
    os << r.identity_id << std::string(width + 2 - r.identity_id.size(), ' ') << to_string(r.status)
       << std::string(10 - to_string(r.status).size(), ' ') << r.samples_passed << '/'
       << r.samples_run << "  max_rel_err=" << shortest(r.max_rel_err);
    if (r.open_question) os << "  [open question]";
    if (!r.reason.empty()) os << "  (" << r.reason << ')';
    os << '\n';
  }
  os << "\n" << report.identities.size() << " identities: "
     << report.count(VerificationStatus::VERIFIED) << " verified, "
     << report.count(VerificationStatus::DISPUTED) << " disputed, "
     << report.count(VerificationStatus::SKIPPED) << " skipped\n";
  bool header = false;
  for (const IdentityReport& r : report.identities) {
    if (r.samples_passed == r.samples_run) continue;
    if (!header) {
      os << "\ndiscrepancies:\n";
      header = true;
    }
    const auto& w = *r.worst_witness;
    os << "  " << r.identity_id << "  " << r.paper_anchor << "\n    witness draw " << w.draw_index
       << ": params=(";
    for (std::size_t i = 0; i < w.instance.params.size(); ++i) {
      os << (i ? "," : "") << shortest(w.instance.params[i]);
    }
    os << ") point=(" << shortest(w.instance.point.x) << ',' << shortest(w.instance.point.y)
       << ") free=" << w.instance.free;
    if (r.family == Family::SUM) os << " t=" << shortest(w.instance.t);
    if (w.outcome.error.empty()) {
      os << " lhs=" << shortest(w.outcome.lhs) << " rhs=" << shortest(w.outcome.rhs)
         << " rel_err=" << shortest(w.outcome.rel_err);
    } else {
      os << " error: " << w.outcome.error;
    }
    os << '\n';
  }
  if (report.wall_time_s) os << "\nwall time " << shortest(*report.wall_time_s) << " s\n";
  os << "seed " << report.plan.seed << ", config " << report.config_hash << '\n';
  return os.str();
}

}  // namespace horn
