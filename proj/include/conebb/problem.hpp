#ifndef CONEBB_PROBLEM_HPP
#define CONEBB_PROBLEM_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "conebb/box.hpp"

namespace conebb {

using ScalarFunction = std::function<double(std::span<const double>)>;

/// Objective and constraint values at one decision point.
struct Evaluation {
  Vector objectives;
  Vector constraints;  // feasible iff every entry >= 0
};

/// A box-constrained multiobjective problem
///   min F(x) = (f_1(x), ..., f_m(x))  s.t.  g_j(x) >= 0,  x in domain,
/// together with a Lipschitz constant for every objective and constraint.
///
/// Functions must be pure and callable concurrently from several threads.
class Problem {
 public:
  Problem(std::string name, Box domain, std::vector<ScalarFunction> objectives,
          Vector lipschitz_obj, std::vector<ScalarFunction> constraints = {},
          Vector lipschitz_con = {});

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t num_vars() const { return domain_.dim(); }
  [[nodiscard]] std::size_t num_objectives() const { return objectives_.size(); }
  [[nodiscard]] std::size_t num_constraints() const { return constraints_.size(); }
  [[nodiscard]] const Box& domain() const { return domain_; }
  [[nodiscard]] const Vector& lipschitz_obj() const { return lipschitz_obj_; }
  [[nodiscard]] const Vector& lipschitz_con() const { return lipschitz_con_; }
  [[nodiscard]] const ScalarFunction& objective(std::size_t i) const { return objectives_[i]; }
  [[nodiscard]] const ScalarFunction& constraint(std::size_t j) const { return constraints_[j]; }

  /// Throws std::out_of_range when x lies outside the domain.
  [[nodiscard]] Evaluation evaluate(std::span<const double> x) const;
  /// evaluate() without the domain check; callers guarantee containment.
  [[nodiscard]] Evaluation evaluate_unchecked(std::span<const double> x) const;
  [[nodiscard]] Vector objectives_at(std::span<const double> x) const;

  /// Euclidean norm of the objective Lipschitz vector.
  [[nodiscard]] double lipschitz_norm() const;

 private:
  std::string name_;
  Box domain_;
  std::vector<ScalarFunction> objectives_;
  Vector lipschitz_obj_;
  std::vector<ScalarFunction> constraints_;
  Vector lipschitz_con_;
};

[[nodiscard]] bool is_feasible(const Evaluation& e);
/// Sum of max(0, -g_j).
[[nodiscard]] double total_violation(const Evaluation& e);

}  // namespace conebb

#endif  // CONEBB_PROBLEM_HPP
