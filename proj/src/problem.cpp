#include "conebb/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace conebb {

Problem::Problem(std::string name, Box domain, std::vector<ScalarFunction> objectives,
                 Vector lipschitz_obj, std::vector<ScalarFunction> constraints,
                 Vector lipschitz_con)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      objectives_(std::move(objectives)),
      lipschitz_obj_(std::move(lipschitz_obj)),
      constraints_(std::move(constraints)),
      lipschitz_con_(std::move(lipschitz_con)) {
  if (objectives_.empty()) throw std::invalid_argument("Problem: no objectives");
  if (lipschitz_obj_.size() != objectives_.size()) {
    throw std::invalid_argument("Problem: one Lipschitz constant per objective required");
  }
  if (lipschitz_con_.size() != constraints_.size()) {
    throw std::invalid_argument("Problem: one Lipschitz constant per constraint required");
  }
  for (double L : lipschitz_obj_) {
    if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("Problem: Lipschitz constants must be > 0");
  }
  for (double L : lipschitz_con_) {
    if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("Problem: Lipschitz constants must be > 0");
  }
  if (domain_.diameter() <= 0.0) throw std::invalid_argument("Problem: degenerate domain");
}

Evaluation Problem::evaluate(std::span<const double> x) const {
  if (!domain_.contains(x)) throw std::out_of_range("Problem::evaluate: point outside the domain");
  return evaluate_unchecked(x);
}

Evaluation Problem::evaluate_unchecked(std::span<const double> x) const {
  Evaluation e;
  e.objectives.reserve(objectives_.size());
  for (const auto& f : objectives_) e.objectives.push_back(f(x));
  e.constraints.reserve(constraints_.size());
  for (const auto& g : constraints_) e.constraints.push_back(g(x));
  return e;
}

Vector Problem::objectives_at(std::span<const double> x) const {
  Vector y;
  y.reserve(objectives_.size());
  for (const auto& f : objectives_) y.push_back(f(x));
  return y;
}

double Problem::lipschitz_norm() const {
  double s = 0.0;
  for (double L : lipschitz_obj_) s += L * L;
  return std::sqrt(s);
}

bool is_feasible(const Evaluation& e) {
  for (double g : e.constraints) {
    if (!(g >= 0.0)) return false;
  }
  return true;
}

double total_violation(const Evaluation& e) {
  double v = 0.0;
  for (double g : e.constraints) {
    if (g < 0.0) v -= g;
  }
  return v;
}

}  // namespace conebb
