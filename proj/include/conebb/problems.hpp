#ifndef CONEBB_PROBLEMS_HPP
#define CONEBB_PROBLEMS_HPP

#include <string>
#include <vector>

#include "conebb/problem.hpp"

namespace conebb::problems {

/// Builder parameters. Fields a problem does not use are ignored.
struct ProblemSpec {
  std::string name;
  double k1 = 1.0;  // TP1/TP2 scale of f1
  double k2 = 1.0;  // TP1/TP2 scale of f2
  int knees = 1;    // DEB2DK/DEB3DK bulge count K
  int num_vars = 0; // DEB2DK/DEB3DK variable count; 0 = default (5 / 3)
};

/// Named experiment setting: builder parameters plus tolerances.
struct Preset {
  std::string name;
  ProblemSpec spec;
  double tol_gap = 0.0;
  double tol_width = 0.0;
  std::vector<std::vector<double>> directions; // ice-cream axis sweep, may be empty
};

/// Registered problem names.
[[nodiscard]] std::vector<std::string> names();

/// Throws std::invalid_argument for an unknown name or bad parameters.
[[nodiscard]] Problem build(const ProblemSpec& spec);
[[nodiscard]] Problem build(const std::string& name);

/// Presets for `problem`; "default" always exists.
[[nodiscard]] std::vector<Preset> presets(const std::string& problem);
/// Throws std::invalid_argument for an unknown problem or preset.
[[nodiscard]] Preset preset(const std::string& problem, const std::string& preset_name = "default");

// Individual builders.
[[nodiscard]] Problem tp1(double k1, double k2);
[[nodiscard]] Problem tp2(double k1, double k2);
[[nodiscard]] Problem pe1();
[[nodiscard]] Problem pe2();
[[nodiscard]] Problem pe3();
[[nodiscard]] Problem deb2dk(int knees, int num_vars = 5);
[[nodiscard]] Problem deb3dk(int knees, int num_vars = 3);
[[nodiscard]] Problem srn();
[[nodiscard]] Problem constr();
[[nodiscard]] Problem kita();

}  // namespace conebb::problems

#endif  // CONEBB_PROBLEMS_HPP
