#ifndef CONEBB_OUTPUT_HPP
#define CONEBB_OUTPUT_HPP

#include <filesystem>
#include <span>
#include <string>

#include "conebb/solver.hpp"
#include "json.hpp"

namespace conebb::output {

/// 17 significant digits with a "." decimal point; round-trips every double.
[[nodiscard]] std::string format_double(double v);

/// One row per upper bound: f1..fm then x1..xn.
void write_front_csv(const std::filesystem::path& path, const SolveResult& r, std::size_t m, std::size_t n);
/// One row per iteration: k, boxes_before, boxes_after_feasibility, boxes_retained, omega_k, gap, elapsed_ms.
void write_trace_csv(const std::filesystem::path& path, std::span<const IterationTrace> trace);
/// Aligns boxes_retained of two traces by iteration; a missing side is left empty.
void write_compare_csv(const std::filesystem::path& path, std::span<const IterationTrace> a,
                       std::span<const IterationTrace> b);
/// U, X, L, final boxes, reference points and the given parameter echo.
[[nodiscard]] nlohmann::json result_to_json(const SolveResult& r, const nlohmann::json& params);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace conebb::output

#endif  // CONEBB_OUTPUT_HPP
