#include "critical_tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "errors.hpp"

namespace npst {
namespace {

const char* kResourceText =
#include "critical_values_data.inc"
    ;

struct TableKey {
  GofStatistic s;
  GofFamily f;
  bool operator<(const TableKey& o) const {
    return std::tie(s, f) < std::tie(o.s, o.f);
  }
};

struct Table {
  // rows: n -> critical values per alpha (alphas_ order)
  std::vector<int> sizes;
  std::vector<std::vector<double>> values;  // [size index][alpha index]
  std::vector<double> asym;                 // per alpha
};

const std::vector<double> kAlphas = {0.20, 0.15, 0.10, 0.05, 0.01};

int alpha_index(double a) {
  for (std::size_t i = 0; i < kAlphas.size(); ++i)
    if (std::fabs(kAlphas[i] - a) < 1e-9) return static_cast<int>(i);
  return -1;
}

const std::map<TableKey, Table>& tables() {
  static std::map<TableKey, Table> parsed = [] {
    std::map<TableKey, Table> out;
    std::map<TableKey, std::map<int, std::vector<double>>> rows;
    std::map<TableKey, std::vector<double>> asym;
    std::istringstream in(kResourceText);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string stat, family, nfield;
      double alpha, cv;
      if (!(ls >> stat >> family >> nfield >> alpha >> cv))
        throw data_error("malformed critical-value resource line: " + line);
      TableKey key{stat == "lilliefors" ? GofStatistic::lilliefors_d
                                        : GofStatistic::anderson_darling_a2,
                   family == "normal" ? GofFamily::normal : GofFamily::exponential};
      int ai = alpha_index(alpha);
      if (ai < 0) throw data_error("unexpected alpha in resource: " + line);
      if (nfield == "asym") {
        auto& v = asym[key];
        v.resize(kAlphas.size(), 0.0);
        v[static_cast<std::size_t>(ai)] = cv;
      } else {
        auto& v = rows[key][std::stoi(nfield)];
        v.resize(kAlphas.size(), 0.0);
        v[static_cast<std::size_t>(ai)] = cv;
      }
    }
    for (auto& [key, byn] : rows) {
      Table t;
      for (auto& [n, vals] : byn) {
        t.sizes.push_back(n);
        t.values.push_back(vals);
      }
      t.asym = asym[key];
      out[key] = std::move(t);
    }
    return out;
  }();
  return parsed;
}

}  // namespace

const std::string& critical_values_resource_text() {
  static const std::string text = kResourceText;
  return text;
}

double critical_value(GofStatistic s, GofFamily f, int n, double alpha) {
  int ai = alpha_index(alpha);
  if (ai < 0) throw usage_error("alpha must be one of 0.20, 0.15, 0.10, 0.05, 0.01");
  const auto& t = tables().at(TableKey{s, f});
  if (n < t.sizes.front())
    throw data_error("sample size " + std::to_string(n) +
                     " below the smallest tabulated size " +
                     std::to_string(t.sizes.front()));
  if (n > t.sizes.back()) {
    if (s == GofStatistic::lilliefors_d)
      return t.asym[static_cast<std::size_t>(ai)] / std::sqrt(static_cast<double>(n));
    return t.asym[static_cast<std::size_t>(ai)];
  }
  auto it = std::lower_bound(t.sizes.begin(), t.sizes.end(), n);
  std::size_t hi = static_cast<std::size_t>(it - t.sizes.begin());
  if (t.sizes[hi] == n) return t.values[hi][static_cast<std::size_t>(ai)];
  std::size_t lo = hi - 1;
  double w = static_cast<double>(n - t.sizes[lo]) /
             static_cast<double>(t.sizes[hi] - t.sizes[lo]);
  return (1.0 - w) * t.values[lo][static_cast<std::size_t>(ai)] +
         w * t.values[hi][static_cast<std::size_t>(ai)];
}

TableBound table_bound(GofStatistic s, GofFamily f, int n, double statistic) {
  // alphas descending in critical value: cv(0.01) > cv(0.05) > ... > cv(0.20)
  const double tight[] = {0.01, 0.05, 0.10, 0.15, 0.20};
  for (double a : tight) {
    if (statistic >= critical_value(s, f, n, a)) return TableBound{a, -1};
  }
  return TableBound{0.20, +1};
}

}  // namespace npst
