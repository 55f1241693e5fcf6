#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "multimorse/error.hpp"
#include "multimorse/ring.hpp"

namespace multimorse {

using CellId = std::uint32_t;
using VertexId = std::uint32_t;

// Sparse homogeneous chain. No zero coefficients are stored.
template <class Ring>
struct Chain {
  using Coef = typename Ring::value_type;

  int dim = -1;  // -1 for the zero chain of unknown degree
  std::map<CellId, Coef> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  Coef coefficient(const Ring& ring, CellId c) const {
    auto it = terms.find(c);
    return it == terms.end() ? ring.zero() : it->second;
  }

  // this += scale * cell
  void add(const Ring& ring, CellId c, const Coef& scale) {
    if (ring.is_zero(scale)) return;
    auto [it, inserted] = terms.try_emplace(c, scale);
    if (!inserted) {
      it->second = ring.add(it->second, scale);
      if (ring.is_zero(it->second)) terms.erase(it);
    }
  }

  // this += scale * other
  void add(const Ring& ring, const Chain& other, const Coef& scale) {
    if (ring.is_zero(scale)) return;
    for (const auto& [c, v] : other.terms) add(ring, c, ring.mul(scale, v));
    if (dim < 0) dim = other.dim;
  }

  friend bool operator==(const Chain& a, const Chain& b) { return a.terms == b.terms; }
};

// Finite S-complex: a graded cell set with a sparse coincidence index kappa
// over Ring. kappa(sigma, tau) is stored twice, once in the face map of sigma
// and once in the coface map of tau. Removed cells are tombstoned so that
// ids stay stable for the lifetime of the object.
template <class Ring>
class SComplex {
 public:
  using Coef = typename Ring::value_type;
  using Incidences = std::map<CellId, Coef>;

  explicit SComplex(Ring ring = Ring{}) : ring_(std::move(ring)) {}

  const Ring& ring() const noexcept { return ring_; }

  CellId add_cell(int dim) {
    if (dim < 0) throw Error(Module::complex, "negative cell dimension");
    dim_.push_back(dim);
    alive_.push_back(true);
    faces_.emplace_back();
    cofaces_.emplace_back();
    ++alive_count_;
    return static_cast<CellId>(dim_.size() - 1);
  }

  // Sets kappa(sigma, tau); a zero value erases the entry.
  void set_kappa(CellId sigma, CellId tau, const Coef& value) {
    require(sigma);
    require(tau);
    if (dim_[sigma] != dim_[tau] + 1) {
      throw Error(Module::complex, "kappa(" + std::to_string(sigma) + "," + std::to_string(tau) +
                                       ") links cells whose dimensions do not differ by one");
    }
    if (ring_.is_zero(value)) {
      faces_[sigma].erase(tau);
      cofaces_[tau].erase(sigma);
      return;
    }
    faces_[sigma].insert_or_assign(tau, value);
    cofaces_[tau].insert_or_assign(sigma, value);
  }

  Coef kappa(CellId sigma, CellId tau) const {
    require(sigma);
    require(tau);
    auto it = faces_[sigma].find(tau);
    return it == faces_[sigma].end() ? ring_.zero() : it->second;
  }

  bool contains(CellId c) const noexcept { return c < dim_.size() && alive_[c]; }
  int dim(CellId c) const {
    require(c);
    return dim_[c];
  }
  // One past the largest id ever issued, including tombstones.
  std::size_t id_bound() const noexcept { return dim_.size(); }
  std::size_t cell_count() const noexcept { return alive_count_; }

  int max_dim() const {
    int d = -1;
    for (CellId c = 0; c < dim_.size(); ++c) {
      if (alive_[c]) d = std::max(d, dim_[c]);
    }
    return d;
  }

  std::vector<CellId> cells() const {
    std::vector<CellId> out;
    out.reserve(alive_count_);
    for (CellId c = 0; c < dim_.size(); ++c) {
      if (alive_[c]) out.push_back(c);
    }
    return out;
  }

  std::vector<CellId> cells_of_dim(int q) const {
    std::vector<CellId> out;
    for (CellId c = 0; c < dim_.size(); ++c) {
      if (alive_[c] && dim_[c] == q) out.push_back(c);
    }
    return out;
  }

  const Incidences& faces(CellId sigma) const {
    require(sigma);
    return faces_[sigma];
  }
  const Incidences& cofaces(CellId tau) const {
    require(tau);
    return cofaces_[tau];
  }

  Chain<Ring> boundary(CellId sigma) const {
    require(sigma);
    Chain<Ring> out;
    out.dim = dim_[sigma] - 1;
    for (const auto& [tau, v] : faces_[sigma]) out.terms.emplace(tau, v);
    return out;
  }

  // Boundary of a chain, extended linearly.
  Chain<Ring> boundary(const Chain<Ring>& chain) const {
    Chain<Ring> out;
    out.dim = chain.dim < 0 ? -1 : chain.dim - 1;
    for (const auto& [c, v] : chain.terms) {
      require(c);
      for (const auto& [tau, k] : faces_[c]) out.add(ring_, tau, ring_.mul(v, k));
    }
    return out;
  }

  std::vector<CellId> primary_faces(CellId sigma) const {
    std::vector<CellId> out;
    for (const auto& entry : faces(sigma)) out.push_back(entry.first);
    return out;
  }
  std::vector<CellId> primary_cofaces(CellId tau) const {
    std::vector<CellId> out;
    for (const auto& entry : cofaces(tau)) out.push_back(entry.first);
    return out;
  }

  // Transitive closure of the primary coface relation, excluding tau.
  std::vector<CellId> cofaces_closure(CellId tau) const {
    require(tau);
    std::vector<CellId> out;
    std::vector<char> seen(dim_.size(), 0);
    std::deque<CellId> queue{tau};
    seen[tau] = 1;
    while (!queue.empty()) {
      CellId c = queue.front();
      queue.pop_front();
      for (const auto& entry : cofaces_[c]) {
        if (!seen[entry.first]) {
          seen[entry.first] = 1;
          out.push_back(entry.first);
          queue.push_back(entry.first);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Tombstones a cell together with every incidence touching it.
  void remove_cell(CellId c) {
    require(c);
    for (const auto& entry : faces_[c]) cofaces_[entry.first].erase(c);
    for (const auto& entry : cofaces_[c]) faces_[entry.first].erase(c);
    faces_[c].clear();
    cofaces_[c].clear();
    alive_[c] = false;
    --alive_count_;
  }

  std::size_t incidence_count() const {
    std::size_t n = 0;
    for (CellId c = 0; c < dim_.size(); ++c) {
      if (alive_[c]) n += faces_[c].size();
    }
    return n;
  }

  // Throws unless the stored kappa satisfies the S-complex axioms: the
  // dimension rule, transpose consistency, and boundary of boundary = 0.
  void check_invariants() const {
    for (CellId s = 0; s < dim_.size(); ++s) {
      if (!alive_[s]) continue;
      for (const auto& [t, v] : faces_[s]) {
        if (!contains(t)) throw Error(Module::complex, "kappa refers to removed cell");
        if (dim_[s] != dim_[t] + 1) throw Error(Module::complex, "kappa violates dimension rule");
        if (ring_.is_zero(v)) throw Error(Module::complex, "stored zero incidence");
        auto it = cofaces_[t].find(s);
        if (it == cofaces_[t].end() || !ring_.equal(it->second, v)) {
          throw Error(Module::complex, "face and coface maps are not transposes");
        }
      }
      for (const auto& [up, v] : cofaces_[s]) {
        auto it = faces_[up].find(s);
        if (it == faces_[up].end() || !ring_.equal(it->second, v)) {
          throw Error(Module::complex, "face and coface maps are not transposes");
        }
      }
      if (!boundary(boundary(s)).empty()) {
        throw Error(Module::complex, "boundary of boundary of cell " + std::to_string(s) + " is not zero");
      }
    }
  }

 private:
  void require(CellId c) const {
    if (!contains(c)) throw Error(Module::complex, "unknown cell id " + std::to_string(c));
  }

  Ring ring_;
  std::vector<int> dim_;
  std::vector<bool> alive_;
  std::vector<Incidences> faces_;
  std::vector<Incidences> cofaces_;
  std::size_t alive_count_ = 0;
};

}  // namespace multimorse
