#include "multimorse/grade.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "multimorse/simplicial.hpp"

namespace multimorse {

namespace {

void require_same_k(const Grade& a, const Grade& b) {
  if (a.size() != b.size()) {
    throw Error(Module::multifilt, "grade dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                       std::to_string(b.size()));
  }
}

}  // namespace

Grade::Grade(std::vector<double> components) : c_(std::move(components)) {
  if (c_.empty()) throw Error(Module::multifilt, "grade must have at least one component");
  for (double x : c_) {
    if (!std::isfinite(x)) throw Error(Module::multifilt, "grade component is not finite");
  }
}

bool leq(const Grade& alpha, const Grade& beta) {
  require_same_k(alpha, beta);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] <= beta[i])) return false;
  }
  return true;
}

bool less(const Grade& alpha, const Grade& beta) {
  require_same_k(alpha, beta);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] < beta[i])) return false;
  }
  return true;
}

bool leq_neq(const Grade& alpha, const Grade& beta) { return leq(alpha, beta) && alpha != beta; }

Grade join(const Grade& alpha, const Grade& beta) {
  require_same_k(alpha, beta);
  std::vector<double> c(alpha.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(alpha[i], beta[i]);
  return Grade(std::move(c));
}

std::string to_string(const Grade& g) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out.push_back(',');
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g[i]);
    out.append(buf, ptr);
  }
  return out;
}

Grade parse_grade(std::string_view text) {
  std::vector<double> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(pos, comma - pos);
    double x = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(Module::multifilt, "bad grade '" + std::string(text) + "'");
    }
    c.push_back(x);
    pos = comma + 1;
  }
  return Grade(std::move(c));
}

MeasuringFunction::MeasuringFunction(std::size_t k, std::vector<Grade> values)
    : k_(k), values_(std::move(values)) {
  if (k_ == 0) throw Error(Module::multifilt, "measuring function needs k >= 1");
  for (const auto& g : values_) {
    if (g.size() != k_) {
      throw Error(Module::multifilt, "vertex grade has " + std::to_string(g.size()) +
                                         " components, expected " + std::to_string(k_));
    }
  }
}

MeasuringFunction MeasuringFunction::restrict(std::span<const VertexId> vertices) const {
  std::vector<Grade> out;
  out.reserve(vertices.size());
  for (VertexId v : vertices) out.push_back(values_.at(v));
  return MeasuringFunction(k_, std::move(out));
}

FiltrationAssignment::FiltrationAssignment(std::vector<Grade> grades) : grades_(std::move(grades)) {
  for (const auto& g : grades_) {
    if (g.size() != k()) throw Error(Module::multifilt, "inconsistent grade dimension in filtration");
  }
}

const Grade& FiltrationAssignment::at(CellId c) const {
  if (c >= grades_.size()) throw Error(Module::multifilt, "no grade stored for cell " + std::to_string(c));
  return grades_[c];
}

Grade cell_grade(const SimplicialComplex& complex, const MeasuringFunction& f, CellId sigma) {
  auto vs = complex.vertices(sigma);
  Grade g = f[vs[0]];
  for (std::size_t i = 1; i < vs.size(); ++i) g = join(g, f[vs[i]]);
  return g;
}

FiltrationAssignment sublevel_filtration(const SimplicialComplex& complex, const MeasuringFunction& f) {
  if (f.size() != complex.vertex_count()) {
    throw Error(Module::multifilt, "measuring function has " + std::to_string(f.size()) +
                                       " values for " + std::to_string(complex.vertex_count()) +
                                       " vertices");
  }
  std::vector<Grade> grades;
  grades.reserve(complex.size());
  for (CellId c = 0; c < complex.size(); ++c) grades.push_back(cell_grade(complex, f, c));
  return FiltrationAssignment(std::move(grades));
}

SublevelMembership::SublevelMembership(const FiltrationAssignment& grades, Grade alpha)
    : grades_(&grades), alpha_(std::move(alpha)) {
  if (grades.size() > 0 && alpha_.size() != grades.k()) {
    throw Error(Module::multifilt, "sublevel grade has wrong dimension");
  }
}

SublevelMembership sublevel_membership(const FiltrationAssignment& grades, const Grade& alpha) {
  return SublevelMembership(grades, alpha);
}

std::vector<Grade> critical_grades(const FiltrationAssignment& grades) {
  std::vector<Grade> out = grades.grades();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Grade> critical_grades(const FiltrationAssignment& grades, std::span<const CellId> cells) {
  std::vector<Grade> out;
  out.reserve(cells.size());
  for (CellId c : cells) out.push_back(grades.at(c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace multimorse
