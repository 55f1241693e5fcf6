#include "multimorse/driver.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>

#include "multimorse/complex_io.hpp"
#include "multimorse/homology.hpp"
#include "multimorse/mesh_io.hpp"
#include "multimorse/stats.hpp"

namespace multimorse {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Input {
  MeshFile mesh;
  SimplicialComplex complex;
  MeasuringFunction f;
};

Input load(const RunConfig& config) {
  Input in;
  in.mesh = read_mesh(config.input);
  in.complex = to_complex(in.mesh);
  in.f = config.values_path ? read_values(*config.values_path, in.mesh.vertices.size())
                            : preset(*config.preset, in.mesh);
  return in;
}

IndexingMap make_index(const MeasuringFunction& f, IndexingKind kind) {
  return kind == IndexingKind::kahn ? topo_sort_kahn(build_dag(f)) : lex_indexing(f);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw Error(Module::io, "cannot write " + path.string());
  return os;
}

SComplex<Rationals> to_rationals(const SComplex<Integers>& complex) {
  SComplex<Rationals> out;
  for (CellId c = 0; c < complex.id_bound(); ++c) out.add_cell(complex.contains(c) ? complex.dim(c) : 0);
  for (CellId c = 0; c < complex.id_bound(); ++c) {
    if (!complex.contains(c)) out.remove_cell(c);
  }
  for (CellId c : complex.cells()) {
    for (const auto& [tau, k] : complex.faces(c)) out.set_kappa(c, tau, Rationals::value_type(k));
  }
  return out;
}

template <class Ring>
struct Pipeline {
  MatchPartition matching;
  SComplex<Ring> original;
  ReductionResult<Ring> reduction;
  double match_ms = 0;
  double reduce_ms = 0;
};

template <class Ring>
Pipeline<Ring> match_and_reduce(const SimplicialComplex& complex, const MeasuringFunction& f,
                                const RunConfig& config, const Ring& ring) {
  auto index = make_index(f, config.indexing);
  auto t0 = Clock::now();
  auto matching = partition(complex, f, index, {config.variant, config.threads});
  double match_ms = ms_since(t0);
  auto original = complex.to_scomplex(ring);
  t0 = Clock::now();
  auto reduction = reduce_all(original, matching, config.order);
  double reduce_ms = ms_since(t0);
  return {std::move(matching), std::move(original), std::move(reduction), match_ms, reduce_ms};
}

template <class Ring>
VerificationReport certify(const SComplex<Ring>& original, const SComplex<Ring>& reduced,
                           const FiltrationAssignment& grades, int q_max) {
  if constexpr (Ring::is_field) {
    return verify_equivalence(original, grades, reduced, grades, q_max);
  } else {
    return verify_equivalence(to_rationals(original), grades, to_rationals(reduced), grades, q_max);
  }
}

// Whole-complex certification, or sampled submeshes above the size cap.
template <class Ring>
bool run_verification(const Input& in, const Pipeline<Ring>& whole, const FiltrationAssignment& grades,
                      const RunConfig& config, const Ring& ring, std::ostream& out, std::ostream* rank_lines) {
  const int q_max = config.q_max >= 0 ? config.q_max : std::max(0, in.complex.max_dim());
  if (in.complex.size() <= config.max_cells) {
    auto report = certify(whole.original, whole.reduction.complex, grades, q_max);
    out << "verify whole complex (" << in.complex.size() << " cells): " << report.summary() << '\n';
    if (rank_lines) *rank_lines << report.original.to_lines();
    return report.pass;
  }
  std::vector<VertexId> centers(in.mesh.vertices.size());
  std::iota(centers.begin(), centers.end(), VertexId{0});
  std::mt19937_64 rng(config.seed);
  std::shuffle(centers.begin(), centers.end(), rng);
  centers.resize(std::min(centers.size(), config.samples));

  const std::size_t cap = std::min(config.max_cells, config.submesh_cells);
  bool all_pass = true;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    Submesh sub = vertex_star_submesh(in.mesh, centers[i], cap);
    SimplicialComplex sub_complex = to_complex(sub.mesh);
    MeasuringFunction sub_f = in.f.restrict(sub.original_vertex);
    auto pipeline = match_and_reduce(sub_complex, sub_f, config, ring);
    auto sub_grades = sublevel_filtration(sub_complex, sub_f);
    auto report = certify(pipeline.original, pipeline.reduction.complex, sub_grades, q_max);
    out << "verify submesh " << i << " (center " << centers[i] << ", " << sub_complex.size() << " -> "
        << pipeline.reduction.complex.cell_count() << " cells): " << report.summary() << '\n';
    if (rank_lines && i == 0) *rank_lines << report.original.to_lines();
    all_pass = all_pass && report.pass;
  }
  return all_pass;
}

template <class Ring>
int run_reduction(const RunConfig& config, const Input& in, const Ring& ring, std::ostream& out,
                  std::ostream& err) {
  auto pipeline = match_and_reduce(in.complex, in.f, config, ring);
  auto grades = sublevel_filtration(in.complex, in.f);
  if (auto violation = find_matching_violation(in.complex, grades, pipeline.matching)) {
    err << "matching: invariant violated: " << *violation << '\n';
    return kInvariantFailure;
  }

  if (config.command != Command::verify) {
    out << stats_table(counts_by_dim(pipeline.original), counts_by_dim(pipeline.reduction.complex));
  }
  if (config.command == Command::reduce) {
    out << "ring " << ring.name() << ", matching " << pipeline.match_ms << " ms, reduction "
        << pipeline.reduce_ms << " ms, " << pipeline.matching.pair_count() << " pairs\n";
    if (config.out) {
      auto os = open_out(*config.out);
      write_complex(os, pipeline.reduction.complex, grades);
    }
  }
  if (config.verify || config.command == Command::verify) {
    std::optional<std::ofstream> lines;
    if (config.command == Command::verify && config.out) lines.emplace(open_out(*config.out));
    bool pass = run_verification(in, pipeline, grades, config, ring, out, lines ? &*lines : nullptr);
    out << (pass ? "VERIFICATION PASS\n" : "VERIFICATION FAIL\n");
    if (!pass) return kInvariantFailure;
  }
  return kOk;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.preset.has_value() == config.values_path.has_value()) {
    throw Error(Module::io, "exactly one of --preset and --values is required");
  }
  if (config.input.empty()) throw Error(Module::io, "no input mesh given");
  if (config.threads == 0) throw Error(Module::io, "--threads must be at least 1");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Input in = load(config);

    switch (config.command) {
      case Command::sort: {
        auto index = make_index(in.f, config.indexing);
        std::optional<std::ofstream> file;
        if (config.out) file.emplace(open_out(*config.out));
        std::ostream& os = file ? *file : out;
        for (VertexId v : index.order()) os << v << '\n';
        return kOk;
      }
      case Command::match: {
        auto index = make_index(in.f, config.indexing);
        auto matching = partition(in.complex, in.f, index, {config.variant, config.threads});
        auto grades = sublevel_filtration(in.complex, in.f);
        auto violation = find_matching_violation(in.complex, grades, matching);
        out << "cells " << in.complex.size() << ", pairs " << matching.pair_count() << ", critical "
            << matching.critical_count() << '\n';
        if (config.out) {
          auto os = open_out(*config.out);
          for (CellId a : matching.generation_order()) os << "PAIR " << a << ' ' << matching.mate(a) << '\n';
          for (CellId c : matching.c_cells()) os << "CRITICAL " << c << '\n';
        }
        if (violation) {
          err << "matching: invariant violated: " << *violation << '\n';
          return kInvariantFailure;
        }
        return kOk;
      }
      case Command::reduce:
      case Command::verify:
      case Command::stats:
        switch (config.ring) {
          case RingKind::z2: return run_reduction(config, in, PrimeField(2), out, err);
          case RingKind::q: return run_reduction(config, in, Rationals{}, out, err);
          case RingKind::z: return run_reduction(config, in, Integers{}, out, err);
        }
    }
    return kOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.module() == Module::io ? kUsageError : kInvariantFailure;
  }
}

Command parse_command(const std::string& name) {
  if (name == "sort") return Command::sort;
  if (name == "match") return Command::match;
  if (name == "reduce") return Command::reduce;
  if (name == "verify") return Command::verify;
  if (name == "stats") return Command::stats;
  throw Error(Module::io, "unknown command '" + name + "'");
}

LinkVariant parse_variant(const std::string& name) {
  if (name == "strict") return LinkVariant::strict;
  if (name == "weak") return LinkVariant::weak;
  throw Error(Module::io, "unknown variant '" + name + "'");
}

IndexingKind parse_indexing(const std::string& name) {
  if (name == "lex") return IndexingKind::lex;
  if (name == "kahn") return IndexingKind::kahn;
  throw Error(Module::io, "unknown indexing '" + name + "'");
}

ReductionOrder parse_order(const std::string& name) {
  if (name == "generation") return ReductionOrder::generation;
  if (name == "dim-desc") return ReductionOrder::dim_desc;
  throw Error(Module::io, "unknown reduction order '" + name + "'");
}

RingKind parse_ring(const std::string& name) {
  if (name == "z2") return RingKind::z2;
  if (name == "q") return RingKind::q;
  if (name == "z") return RingKind::z;
  throw Error(Module::io, "unknown ring '" + name + "'");
}

}  // namespace multimorse
