#pragma once

// Text format for (reduced) filtered S-complexes:
//
//   k <k>
//   cells <count>
//   <id> <dim> <grade_1> ... <grade_k>      (count lines, increasing id)
//   boundary <entries>
//   <sigma> <tau> <coeff>                   (entries lines)
//
// Ids are the stable ids of the source complex, so a reduced complex keeps
// the numbering of the complex it came from. Grades use the shortest
// decimal form that reads back to the same double.

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "multimorse/complex.hpp"
#include "multimorse/grade.hpp"

namespace multimorse {

template <class Ring>
struct FilteredComplex {
  SComplex<Ring> complex;
  FiltrationAssignment grades;
};

inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

template <class Ring>
void write_complex(std::ostream& out, const SComplex<Ring>& complex, const FiltrationAssignment& grades) {
  const auto cells = complex.cells();
  out << "k " << grades.k() << '\n';
  out << "cells " << cells.size() << '\n';
  for (CellId c : cells) {
    out << c << ' ' << complex.dim(c);
    for (double x : grades.at(c).components()) out << ' ' << format_double(x);
    out << '\n';
  }
  out << "boundary " << complex.incidence_count() << '\n';
  for (CellId c : cells) {
    for (const auto& [tau, k] : complex.faces(c)) out << c << ' ' << tau << ' ' << complex.ring().to_string(k) << '\n';
  }
}

template <class Ring>
FilteredComplex<Ring> read_complex(std::istream& in, Ring ring = Ring{}) {
  auto fail = [](const std::string& what) -> void { throw Error(Module::io, "reduced complex: " + what); };
  std::string word;
  std::size_t k = 0, count = 0, entries = 0;
  if (!(in >> word >> k) || word != "k" || k == 0) fail("expected 'k <k>' header");
  if (!(in >> word >> count) || word != "cells") fail("expected 'cells <count>' header");

  struct Row {
    CellId id;
    int dim;
    std::vector<double> grade;
  };
  std::vector<Row> rows;
  rows.reserve(count);
  CellId bound = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Row r{};
    if (!(in >> r.id >> r.dim)) fail("malformed cell line");
    for (std::size_t j = 0; j < k; ++j) {
      std::string token;
      double x = 0;
      if (!(in >> token)) fail("missing grade component");
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
      if (ec != std::errc() || ptr != token.data() + token.size()) fail("bad grade component '" + token + "'");
      r.grade.push_back(x);
    }
    if (!rows.empty() && r.id <= rows.back().id) fail("cell ids must increase");
    bound = r.id + 1;
    rows.push_back(std::move(r));
  }

  FilteredComplex<Ring> out{SComplex<Ring>(ring), {}};
  std::vector<Grade> grades(bound, Grade(std::vector<double>(k, 0.0)));
  std::vector<char> present(bound, 0);
  // ids not listed become tombstones so numbering is preserved
  std::size_t next = 0;
  for (CellId c = 0; c < bound; ++c) {
    if (next < rows.size() && rows[next].id == c) {
      out.complex.add_cell(rows[next].dim);
      grades[c] = Grade(rows[next].grade);
      present[c] = 1;
      ++next;
    } else {
      out.complex.add_cell(0);
    }
  }
  for (CellId c = 0; c < bound; ++c) {
    if (!present[c]) out.complex.remove_cell(c);
  }

  if (!(in >> word >> entries) || word != "boundary") fail("expected 'boundary <entries>' line");
  for (std::size_t i = 0; i < entries; ++i) {
    CellId sigma = 0, tau = 0;
    std::string coeff;
    if (!(in >> sigma >> tau >> coeff)) fail("malformed boundary entry");
    out.complex.set_kappa(sigma, tau, out.complex.ring().parse(coeff));
  }
  out.grades = FiltrationAssignment(std::move(grades));
  return out;
}

}  // namespace multimorse
