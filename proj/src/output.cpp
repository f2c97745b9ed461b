#include "conebb/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace conebb::output {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_front_csv(const std::filesystem::path& path, const SolveResult& r, std::size_t m, std::size_t n) {
  auto out = open_for_write(path);
  for (std::size_t i = 0; i < m; ++i) out << (i ? "," : "") << 'f' << (i + 1);
  for (std::size_t k = 0; k < n; ++k) out << ",x" << (k + 1);
  out << '\n';
  for (std::size_t row = 0; row < r.upper_bounds.size(); ++row) {
    for (std::size_t i = 0; i < m; ++i) out << (i ? "," : "") << format_double(r.upper_bounds[row][i]);
    for (std::size_t k = 0; k < n; ++k) out << ',' << format_double(r.solutions[row][k]);
    out << '\n';
  }
  finish(out, path);
}

void write_trace_csv(const std::filesystem::path& path, std::span<const IterationTrace> trace) {
  auto out = open_for_write(path);
  out << "k,boxes_before,boxes_after_feasibility,boxes_retained,omega_k,gap,elapsed_ms\n";
  for (const auto& t : trace) {
    out << t.k << ',' << t.boxes_before << ',' << t.boxes_after_feasibility << ',' << t.boxes_retained << ','
        << format_double(t.omega_k) << ',' << format_double(t.gap) << ',' << format_double(t.elapsed.count())
        << '\n';
  }
  finish(out, path);
}

void write_compare_csv(const std::filesystem::path& path, std::span<const IterationTrace> a,
                       std::span<const IterationTrace> b) {
  auto out = open_for_write(path);
  out << "k,boxes_retained_a,boxes_retained_b\n";
  const std::size_t rows = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < rows; ++i) {
    out << (i + 1) << ',';
    if (i < a.size()) out << a[i].boxes_retained;
    out << ',';
    if (i < b.size()) out << b[i].boxes_retained;
    out << '\n';
  }
  finish(out, path);
}

nlohmann::json result_to_json(const SolveResult& r, const nlohmann::json& params) {
  nlohmann::json doc;
  doc["params"] = params;
  doc["status"] = to_string(r.status);
  doc["iterations"] = r.trace.size();
  doc["gap"] = r.gap;
  doc["omega"] = r.omega;
  doc["upper_bounds"] = r.upper_bounds;
  doc["solutions"] = r.solutions;
  doc["lower_bounds"] = r.lower_bounds;
  auto boxes = nlohmann::json::array();
  for (const auto& b : r.boxes) boxes.push_back({{"lo", b.lo()}, {"hi", b.hi()}});
  doc["boxes"] = std::move(boxes);
  doc["reference"] = {{"l_star", r.reference.l_star}, {"u_nad", r.reference.u_nad}};
  doc["warnings"] = r.warnings;
  if (!r.diagnostic.empty()) doc["diagnostic"] = r.diagnostic;
  return doc;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  auto out = open_for_write(path);
  out << doc.dump(2) << '\n';
  finish(out, path);
}

}  // namespace conebb::output
