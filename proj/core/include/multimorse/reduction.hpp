#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "multimorse/complex.hpp"
#include "multimorse/matching.hpp"

namespace multimorse {

enum class ReductionOrder { generation, dim_desc };

// Record of one elementary reduction of the pair (upper, lower), where
// upper = m(lower). Enough to evaluate the projection, inclusion and
// homotopy of the step after the complex has been modified.
template <class Ring>
struct ReductionStep {
  using Coef = typename Ring::value_type;

  CellId lower = 0;
  CellId upper = 0;
  Coef pivot{};                                      // kappa(upper, lower)
  std::vector<std::pair<CellId, Coef>> upper_faces;  // kappa(upper, xi), xi != lower
  std::vector<std::pair<CellId, Coef>> lower_cofaces;  // kappa(eta, lower), eta != upper
  std::size_t updated_entries = 0;
};

// Removes lower and upper and rewrites
//   kappa(eta, xi) -= kappa(eta, lower) * kappa(upper, xi) / kappa(upper, lower)
// for every surviving coface eta of lower and face xi of upper.
template <class Ring>
ReductionStep<Ring> reduce_pair(SComplex<Ring>& complex, CellId lower, CellId upper) {
  const Ring& ring = complex.ring();
  ReductionStep<Ring> step;
  step.lower = lower;
  step.upper = upper;
  step.pivot = complex.kappa(upper, lower);
  if (!ring.is_unit(step.pivot)) {
    throw Error(Module::reduction, "incidence kappa(" + std::to_string(upper) + "," + std::to_string(lower) +
                                       ") = " + ring.to_string(step.pivot) + " is not a unit of " +
                                       ring.name());
  }
  for (const auto& [xi, k] : complex.faces(upper)) {
    if (xi != lower) step.upper_faces.emplace_back(xi, k);
  }
  for (const auto& [eta, k] : complex.cofaces(lower)) {
    if (eta != upper) step.lower_cofaces.emplace_back(eta, k);
  }
  for (const auto& [eta, k_eta] : step.lower_cofaces) {
    const auto factor = ring.divide(k_eta, step.pivot);
    for (const auto& [xi, k_xi] : step.upper_faces) {
      auto updated = ring.sub(complex.kappa(eta, xi), ring.mul(factor, k_xi));
      complex.set_kappa(eta, xi, updated);
      ++step.updated_entries;
    }
  }
  complex.remove_cell(upper);
  complex.remove_cell(lower);
  return step;
}

// Projection of the step, C(S) -> C(S-bar), on a generator.
template <class Ring>
Chain<Ring> project(const Ring& ring, const ReductionStep<Ring>& step, CellId x, int dim) {
  Chain<Ring> out;
  out.dim = dim;
  if (x == step.upper) return out;
  if (x == step.lower) {
    for (const auto& [xi, k] : step.upper_faces) out.add(ring, xi, ring.neg(ring.divide(k, step.pivot)));
    return out;
  }
  out.add(ring, x, ring.one());
  return out;
}

// Inclusion of the step, C(S-bar) -> C(S), on a generator.
template <class Ring>
Chain<Ring> include(const Ring& ring, const ReductionStep<Ring>& step, CellId y, int dim) {
  Chain<Ring> out;
  out.dim = dim;
  out.add(ring, y, ring.one());
  for (const auto& [eta, k] : step.lower_cofaces) {
    if (eta == y) out.add(ring, step.upper, ring.neg(ring.divide(k, step.pivot)));
  }
  return out;
}

// Chain homotopy of the step, degree +1, on a generator.
template <class Ring>
Chain<Ring> homotopy(const Ring& ring, const ReductionStep<Ring>& step, CellId x, int dim) {
  Chain<Ring> out;
  out.dim = dim + 1;
  if (x == step.lower) out.add(ring, step.upper, ring.divide(ring.one(), step.pivot));
  return out;
}

// Sparse linear map given by the images of generators of its domain.
template <class Ring>
class ChainMap {
 public:
  using Coef = typename Ring::value_type;

  ChainMap() = default;
  explicit ChainMap(Ring ring) : ring_(std::move(ring)) {}

  void set_image(CellId x, Chain<Ring> image) { columns_.insert_or_assign(x, std::move(image)); }

  Chain<Ring> image(CellId x) const {
    auto it = columns_.find(x);
    return it == columns_.end() ? Chain<Ring>{} : it->second;
  }

  Chain<Ring> apply(const Chain<Ring>& chain) const {
    Chain<Ring> out;
    for (const auto& [c, v] : chain.terms) {
      auto it = columns_.find(c);
      if (it != columns_.end()) out.add(ring_, it->second, v);
    }
    return out;
  }

  const std::map<CellId, Chain<Ring>>& columns() const noexcept { return columns_; }

 private:
  Ring ring_{};
  std::map<CellId, Chain<Ring>> columns_;
};

template <class Ring>
ChainMap<Ring> projection(const SComplex<Ring>& before, const ReductionStep<Ring>& step) {
  ChainMap<Ring> out(before.ring());
  for (CellId x : before.cells()) out.set_image(x, project(before.ring(), step, x, before.dim(x)));
  return out;
}

template <class Ring>
ChainMap<Ring> inclusion(const SComplex<Ring>& after, const ReductionStep<Ring>& step) {
  ChainMap<Ring> out(after.ring());
  for (CellId y : after.cells()) out.set_image(y, include(after.ring(), step, y, after.dim(y)));
  return out;
}

template <class Ring>
ChainMap<Ring> homotopy(const SComplex<Ring>& before, const ReductionStep<Ring>& step) {
  ChainMap<Ring> out(before.ring());
  for (CellId x : before.cells()) out.set_image(x, homotopy(before.ring(), step, x, before.dim(x)));
  return out;
}

// Composition of the projections and inclusions of a reduction sequence,
// maintained incrementally: pi(x) for every original cell x as a chain of
// the current complex, iota(y) for every current cell y as a chain of the
// original complex.
template <class Ring>
class ComposedMaps {
 public:
  explicit ComposedMaps(const SComplex<Ring>& original) : ring_(original.ring()) {
    pi_.resize(original.id_bound());
    iota_.resize(original.id_bound());
    users_.resize(original.id_bound());
    for (CellId c : original.cells()) {
      pi_[c].dim = iota_[c].dim = original.dim(c);
      pi_[c].add(ring_, c, ring_.one());
      iota_[c].add(ring_, c, ring_.one());
      users_[c].insert(c);
    }
  }

  void apply(const ReductionStep<Ring>& step) {
    for (CellId x : users_[step.upper]) pi_[x].terms.erase(step.upper);
    users_[step.upper].clear();
    for (CellId x : users_[step.lower]) {
      auto a = pi_[x].terms.at(step.lower);
      pi_[x].terms.erase(step.lower);
      for (const auto& [xi, k] : step.upper_faces) {
        pi_[x].add(ring_, xi, ring_.neg(ring_.mul(a, ring_.divide(k, step.pivot))));
        if (pi_[x].terms.count(xi)) {
          users_[xi].insert(x);
        } else {
          users_[xi].erase(x);
        }
      }
    }
    users_[step.lower].clear();

    for (const auto& [eta, k] : step.lower_cofaces) {
      iota_[eta].add(ring_, iota_[step.upper], ring_.neg(ring_.divide(k, step.pivot)));
    }
    iota_[step.lower] = {};
    iota_[step.upper] = {};
  }

  // Original cell -> chain in the current complex.
  const Chain<Ring>& pi(CellId original) const { return pi_.at(original); }
  // Current cell -> chain in the original complex.
  const Chain<Ring>& iota(CellId current) const { return iota_.at(current); }

 private:
  Ring ring_;
  std::vector<Chain<Ring>> pi_;
  std::vector<Chain<Ring>> iota_;
  std::vector<std::set<CellId>> users_;
};

// Cells of A in the order they will be reduced.
template <class Ring>
std::vector<CellId> reduction_sequence(const SComplex<Ring>& complex, const MatchPartition& matching,
                                       ReductionOrder order) {
  std::vector<CellId> seq = matching.generation_order();
  if (order == ReductionOrder::dim_desc) {
    std::stable_sort(seq.begin(), seq.end(),
                     [&](CellId x, CellId y) { return complex.dim(x) > complex.dim(y); });
  }
  return seq;
}

template <class Ring>
struct ReductionResult {
  SComplex<Ring> complex;
  std::vector<ReductionStep<Ring>> trace;
  std::optional<ComposedMaps<Ring>> maps;
};

// Reduces every matched pair. The surviving cells are exactly the critical
// cells of the matching; grades are not touched since they are indexed by
// stable cell ids.
template <class Ring>
ReductionResult<Ring> reduce_all(SComplex<Ring> complex, const MatchPartition& matching, ReductionOrder order,
                                 bool track_maps = false) {
  if (matching.cell_count() != complex.id_bound()) {
    throw Error(Module::reduction, "matching and complex have different cell counts");
  }
  ReductionResult<Ring> result{SComplex<Ring>(complex.ring()), {}, std::nullopt};
  if (track_maps) result.maps.emplace(complex);
  const auto seq = reduction_sequence(complex, matching, order);
  result.trace.reserve(seq.size());
  for (CellId lower : seq) {
    result.trace.push_back(reduce_pair(complex, lower, matching.mate(lower)));
    if (result.maps) result.maps->apply(result.trace.back());
  }
  for (CellId c : complex.cells()) {
    if (matching.role(c) != CellRole::c) {
      throw Error(Module::reduction, "non-critical cell " + std::to_string(c) + " survived reduction");
    }
  }
  if (complex.cell_count() != matching.critical_count()) {
    throw Error(Module::reduction, "reduced complex does not match the critical cell set");
  }
  result.complex = std::move(complex);
  return result;
}

// Dense renumbering of the surviving cells; original_id[new] = old.
template <class Ring>
struct CompactedComplex {
  SComplex<Ring> complex;
  std::vector<CellId> original_id;
};

template <class Ring>
CompactedComplex<Ring> compact(const SComplex<Ring>& complex) {
  CompactedComplex<Ring> out{SComplex<Ring>(complex.ring()), complex.cells()};
  std::vector<CellId> new_id(complex.id_bound(), MatchPartition::kNoMate);
  for (CellId i = 0; i < out.original_id.size(); ++i) {
    new_id[out.original_id[i]] = out.complex.add_cell(complex.dim(out.original_id[i]));
  }
  for (CellId old : out.original_id) {
    for (const auto& [tau, k] : complex.faces(old)) out.complex.set_kappa(new_id[old], new_id[tau], k);
  }
  return out;
}

}  // namespace multimorse
