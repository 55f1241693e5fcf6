#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "multimorse/complex.hpp"
#include "multimorse/error.hpp"

namespace multimorse {

class SimplicialComplex;

// A point of R^k, k >= 1, with finite components.
class Grade {
 public:
  Grade() = default;
  explicit Grade(std::vector<double> components);
  Grade(std::initializer_list<double> components) : Grade(std::vector<double>(components)) {}

  std::size_t size() const noexcept { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  std::span<const double> components() const noexcept { return c_; }

  // Lexicographic; only used for deterministic ordering.
  friend auto operator<=>(const Grade&, const Grade&) = default;
  friend bool operator==(const Grade&, const Grade&) = default;

 private:
  std::vector<double> c_;
};

// alpha <= beta componentwise
bool leq(const Grade& alpha, const Grade& beta);
// alpha < beta in every component
bool less(const Grade& alpha, const Grade& beta);
// leq(alpha, beta) and alpha != beta
bool leq_neq(const Grade& alpha, const Grade& beta);
// componentwise maximum
Grade join(const Grade& alpha, const Grade& beta);

// Comma-separated shortest round-trip decimal form, e.g. "1.5,2".
std::string to_string(const Grade& g);
Grade parse_grade(std::string_view text);

// Vertex values f : S_0 -> R^k.
class MeasuringFunction {
 public:
  MeasuringFunction() = default;
  MeasuringFunction(std::size_t k, std::vector<Grade> values);

  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Grade& operator[](VertexId v) const { return values_.at(v); }
  const std::vector<Grade>& values() const noexcept { return values_; }

  // Restriction to the given vertices (in the given order).
  MeasuringFunction restrict(std::span<const VertexId> vertices) const;

 private:
  std::size_t k_ = 0;
  std::vector<Grade> values_;
};

// Entry grade of every cell, indexed by CellId. Grades of removed cells are
// retained so ids stay valid across reductions.
class FiltrationAssignment {
 public:
  FiltrationAssignment() = default;
  explicit FiltrationAssignment(std::vector<Grade> grades);

  std::size_t k() const noexcept { return grades_.empty() ? 0 : grades_.front().size(); }
  std::size_t size() const noexcept { return grades_.size(); }
  const Grade& at(CellId c) const;
  const std::vector<Grade>& grades() const noexcept { return grades_; }

 private:
  std::vector<Grade> grades_;
};

// Componentwise maximum of f over the vertices of sigma.
Grade cell_grade(const SimplicialComplex& complex, const MeasuringFunction& f, CellId sigma);
FiltrationAssignment sublevel_filtration(const SimplicialComplex& complex, const MeasuringFunction& f);

// sigma -> grade(sigma) <= alpha
class SublevelMembership {
 public:
  SublevelMembership(const FiltrationAssignment& grades, Grade alpha);
  bool operator()(CellId c) const { return leq(grades_->at(c), alpha_); }
  const Grade& alpha() const noexcept { return alpha_; }

 private:
  const FiltrationAssignment* grades_;
  Grade alpha_;
};

SublevelMembership sublevel_membership(const FiltrationAssignment& grades, const Grade& alpha);

// Distinct cell grades, sorted lexicographically.
std::vector<Grade> critical_grades(const FiltrationAssignment& grades);
std::vector<Grade> critical_grades(const FiltrationAssignment& grades, std::span<const CellId> cells);

// Throws unless grade(tau) <= grade(sigma) for every stored kappa(sigma, tau).
template <class Ring>
void check_face_monotone(const SComplex<Ring>& complex, const FiltrationAssignment& grades) {
  for (CellId s : complex.cells()) {
    for (const auto& entry : complex.faces(s)) {
      if (!leq(grades.at(entry.first), grades.at(s))) {
        throw Error(Module::multifilt, "grade of face " + std::to_string(entry.first) +
                                           " exceeds grade of cell " + std::to_string(s));
      }
    }
  }
}

}  // namespace multimorse
