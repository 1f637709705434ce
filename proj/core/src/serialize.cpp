#include "mubclass/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mubclass/digest.hpp"

namespace mubclass {

namespace {

// nlohmann's ordered dump is insertion-ordered; plain json sorts keys,
// which is the canonical order we hash.
using json = nlohmann::json;

json table_json(const TransformTable& table) {
  json j;
  j["d"] = table.d;
  auto& rows = j["rows"] = json::array();
  for (const auto& r : table.rows) {
    json row;
    row["label"] = r.label;
    row["images"] = r.images;
    if (r.perm) row["perm"] = *r.perm;
    rows.push_back(std::move(row));
  }
  return j;
}

}  // namespace

std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);  // fold -0.0 into +0.0
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";  // values in (-5e-7, 0) also round here
  return s;
}

std::string fnv1a64_hex(std::string_view data) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

std::string to_json_string(const TransformTable& table) {
  return table_json(table).dump();
}

std::string to_json_string(const OrbitPartition& partition) {
  json j;
  j["d"] = partition.d;
  j["k"] = partition.k;
  j["total"] = partition.total;
  j["group_order"] = partition.group_order;
  j["class_count"] = partition.classes.size();
  auto& classes = j["classes"] = json::array();
  for (const auto& c : partition.classes) {
    json cj;
    cj["representative"] = c.representative.indices();
    cj["size"] = c.size;
    if (c.members) {
      auto& mem = cj["members"] = json::array();
      for (const auto& m : *c.members) mem.push_back(m.indices());
    }
    classes.push_back(std::move(cj));
  }
  return j.dump();
}

std::string to_json_string(const ComplexityEstimate& estimate) {
  json j;
  j["d"] = estimate.d;
  j["k"] = estimate.k;
  j["s"] = estimate.s;
  j["log10_t_u"] = format_fixed6(estimate.log10_t_u);
  j["log10_t_s"] = format_fixed6(estimate.log10_t_s);
  j["log10_t_r"] = format_fixed6(estimate.log10_t_r);
  return j.dump();
}

std::string to_json_string(const EntropyReport& report) {
  json j;
  j["d"] = report.d;
  j["k"] = report.k;
  j["gap"] = format_fixed6(report.gap);
  auto& subsets = j["subsets"] = json::array();
  for (const auto& s : report.subsets) {
    json sj;
    sj["subset"] = s.subset.indices();
    sj["min_entropy"] = format_fixed6(s.min_entropy);
    sj["starts_used"] = s.starts_used;
    sj["converged_starts"] = s.converged_starts;
    subsets.push_back(std::move(sj));
  }
  auto& clusters = j["clusters"] = json::array();
  for (const auto& c : report.clusters) {
    json cj;
    cj["min_value"] = format_fixed6(c.min_value);
    cj["max_value"] = format_fixed6(c.max_value);
    auto& mem = cj["members"] = json::array();
    for (const auto& m : c.members) mem.push_back(m.indices());
    clusters.push_back(std::move(cj));
  }
  return j.dump();
}

std::string to_json_string(const PermSet& perms, int d) {
  json j;
  j["d"] = d;
  j["count"] = perms.perms.size();
  j["exhaustive"] = perms.exhaustive;
  auto& arr = j["perms"] = json::array();
  for (const auto& g : perms.perms) {
    json gj;
    gj["perm"] = g.perm;
    gj["images"] = g.induced_images;
    arr.push_back(std::move(gj));
  }
  return j.dump();
}

std::string to_csv_string(const TransformTable& table) {
  std::ostringstream out;
  out << "generator";
  for (int y = 0; y <= table.d; ++y) out << ",psi" << y;
  out << "\n";
  for (const auto& r : table.rows) {
    out << r.label;
    for (int img : r.images) out << "," << img;
    out << "\n";
  }
  return out.str();
}

std::string to_csv_string(std::span<const ComplexityCurveRow> rows) {
  std::ostringstream out;
  out << "d,s,log10_t_u,log10_t_s,log10_t_r\n";
  for (const auto& r : rows) {
    out << r.d << "," << r.s << "," << format_fixed6(r.log10_t_u) << ","
        << format_fixed6(r.log10_t_s) << "," << format_fixed6(r.log10_t_r) << "\n";
  }
  return out.str();
}

}  // namespace mubclass
