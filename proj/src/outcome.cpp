#include "outcome.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "exact_laws.hpp"
#include "special.hpp"

namespace npst {

const char* alternative_name(Alternative a) {
  switch (a) {
    case Alternative::two_sided: return "two-sided";
    case Alternative::left: return "left";
    case Alternative::right: return "right";
    case Alternative::ordered_increasing: return "ordered";
    default: return "control";
  }
}

Alternative parse_alternative(const std::string& name) {
  if (name == "two" || name == "two-sided" || name == "two_sided")
    return Alternative::two_sided;
  if (name == "left") return Alternative::left;
  if (name == "right") return Alternative::right;
  if (name == "ordered") return Alternative::ordered_increasing;
  if (name == "control") return Alternative::control_comparison;
  throw usage_error("unknown alternative '" + name +
                    "' (expected two, left, right, ordered or control)");
}

double TestOutcome::statistic(const std::string& name) const {
  for (const auto& [k, v] : statistics)
    if (k == name) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

bool TestOutcome::has_statistic(const std::string& name) const {
  for (const auto& [k, v] : statistics)
    if (k == name) return true;
  return false;
}

double double_tail(double left, double right) {
  return std::min(1.0, 2.0 * std::min(left, right));
}

void set_exact_from_law(TestOutcome& o, const DiscreteLaw& law, double observed) {
  double l = law.cdf(observed);
  double r = law.sf(observed);
  o.exact_left = PValue{l};
  o.exact_right = PValue{r};
  o.exact_double = PValue{double_tail(l, r)};
}

void set_asymptotic_from_z(TestOutcome& o, double z) {
  double l = normal_cdf(z);
  double r = normal_cdf(-z);
  o.asymptotic_left = PValue{l};
  o.asymptotic_right = PValue{r};
  o.asymptotic_double = PValue{double_tail(l, r)};
}

namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void p_line(std::ostringstream& out, const char* kind, const char* tail,
            const std::optional<PValue>& p) {
  if (!p) return;
  out << "  " << kind << ' ' << tail << "-tail p-value: ";
  if (p->bracket < 0)
    out << "< ";
  else if (p->bracket > 0)
    out << "> ";
  out << fixed4(p->value) << '\n';
}

}  // namespace

std::string format_report(const TestOutcome& o) {
  std::ostringstream out;
  out << "Test: " << o.test_name << '\n';
  if (o.alternative) out << "Alternative: " << alternative_name(*o.alternative) << '\n';
  out << "Statistics:\n";
  for (const auto& [name, value] : o.statistics)
    out << "  " << name << ": " << fixed4(value) << '\n';
  bool any_p = o.exact_left || o.exact_right || o.exact_double ||
               o.asymptotic_left || o.asymptotic_right || o.asymptotic_double;
  if (!any_p) {
    out << "p-values: not available\n";
  } else {
    out << "P-values:\n";
    p_line(out, "Exact", "left", o.exact_left);
    p_line(out, "Exact", "right", o.exact_right);
    p_line(out, "Exact", "double", o.exact_double);
    p_line(out, "Asymptotic", "left", o.asymptotic_left);
    p_line(out, "Asymptotic", "right", o.asymptotic_right);
    p_line(out, "Asymptotic", "double", o.asymptotic_double);
  }
  if (!o.notes.empty()) {
    out << "Notes:\n";
    for (const auto& n : o.notes) out << "  - " << n << '\n';
  }
  return out.str();
}

std::string to_json(const TestOutcome& o) {
  using json = nlohmann::ordered_json;
  json j;
  j["test"] = o.test_name;
  if (o.alternative) j["alternative"] = alternative_name(*o.alternative);
  json stats = json::object();
  for (const auto& [name, value] : o.statistics) stats[name] = value;
  j["statistics"] = stats;
  auto pv = [](const std::optional<PValue>& p) -> json {
    if (!p) return nullptr;
    json v;
    v["value"] = p->value;
    if (p->bracket) v["bound"] = p->bracket < 0 ? "less_than" : "greater_than";
    return v;
  };
  j["p_values"]["exact"]["left"] = pv(o.exact_left);
  j["p_values"]["exact"]["right"] = pv(o.exact_right);
  j["p_values"]["exact"]["double"] = pv(o.exact_double);
  j["p_values"]["asymptotic"]["left"] = pv(o.asymptotic_left);
  j["p_values"]["asymptotic"]["right"] = pv(o.asymptotic_right);
  j["p_values"]["asymptotic"]["double"] = pv(o.asymptotic_double);
  j["notes"] = o.notes;
  return j.dump(2);
}

}  // namespace npst
