#include "report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "copack/version.hpp"

namespace copack::report {

namespace {

const char* mode_name(BoundMode m) { return m == BoundMode::Delsarte ? "delsarte" : "copositive"; }
const char* status_name(BoundStatus s) { return s == BoundStatus::Optimal ? "optimal" : "infeasible"; }

// NaN/inf have no JSON representation; they serialize as null.
void append_json_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void append_double_list(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    append_json_double(out, values[i]);
  }
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string kissing_json(const BoundReport& r) {
  const auto& inst = r.instance;
  std::string out;
  out.reserve(4096);
  out += "{\n";
  out += "  \"tool_version\": \"";
  out += kToolVersion;
  out += "\",\n";
  out += "  \"subcommand\": \"kissing\",\n";
  out += "  \"inputs\": {\"dim\": " + std::to_string(inst.dim) +
         ", \"degree\": " + std::to_string(inst.degree) +
         ", \"grid\": " + std::to_string(inst.grid_size) +
         ", \"max_iters\": " + std::to_string(inst.max_iters) +
         ", \"restarts\": " + std::to_string(inst.restarts) +
         ", \"nmax\": " + std::to_string(inst.effective_n_max()) + "},\n";
  out += std::string("  \"mode\": \"") + mode_name(r.mode) + "\",\n";
  out += std::string("  \"status\": \"") + status_name(r.status) + "\",\n";
  out += "  \"bound\": ";
  append_json_double(out, r.bound);
  out += ",\n";
  out += std::string("  \"certified\": ") + (r.certified ? "true" : "false") + ",\n";
  out += "  \"iterations\": " + std::to_string(r.iterations) + ",\n";
  out += "  \"constraint_check\": ";
  append_json_double(out, r.constraint_check);
  out += ",\n";
  out += "  \"coefficients\": ";
  append_double_list(out, r.coefficients);
  out += ",\n";
  out += "  \"cuts\": [";
  for (size_t c = 0; c < r.cuts.size(); ++c) {
    if (c) out += ',';
    out += "\n    {\"points\": [";
    const auto& pts = r.cuts[c].config.points;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ',';
      append_double_list(out, pts[i]);
    }
    out += "], \"energy\": ";
    append_json_double(out, r.cuts[c].energy);
    out += "}";
  }
  if (!r.cuts.empty()) out += "\n  ";
  out += "],\n";
  out += "  \"trace\": ";
  append_double_list(out, r.trace);
  out += ",\n";
  out += "  \"seed\": " + std::to_string(r.instance.seed) + "\n";
  out += "}\n";
  return out;
}

std::string kissing_csv(const BoundReport& r) {
  std::string out = "iteration,objective\n";
  for (size_t i = 0; i < r.trace.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(r.trace[i]);
    out += '\n';
  }
  return out;
}

std::string kissing_text(const BoundReport& r) {
  std::ostringstream out;
  out << "kissing bound report\n";
  out << "  mode            " << mode_name(r.mode) << "\n";
  out << "  dim             " << r.instance.dim << "\n";
  out << "  degree          " << r.instance.degree << "\n";
  out << "  grid            " << r.instance.grid_size << "\n";
  out << "  status          " << status_name(r.status) << "\n";
  out << "  bound           " << format_double(r.bound) << "\n";
  out << "  certified       " << (r.certified ? "true" : "false") << "\n";
  out << "  iterations      " << r.iterations << "\n";
  out << "  constraint_check " << format_double(r.constraint_check) << "\n";
  out << "  cuts            " << r.cuts.size() << "\n";
  out << "  seed            " << r.instance.seed << "\n";
  return out.str();
}

std::string kissing_summary(const BoundReport& r) {
  std::string out = "mode=";
  out += mode_name(r.mode);
  out += " dim=" + std::to_string(r.instance.dim);
  out += " d=" + std::to_string(r.instance.degree);
  out += " bound=" + format_double(r.bound);
  out += std::string(" certified=") + (r.certified ? "true" : "false");
  return out;
}

}  // namespace copack::report
