#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "multimorse/matching.hpp"
#include "multimorse/reduction.hpp"

namespace multimorse {

enum class Command { sort, match, reduce, verify, stats };
enum class IndexingKind { lex, kahn };
enum class RingKind { z2, q, z };

struct RunConfig {
  Command command = Command::reduce;
  std::filesystem::path input;
  // Exactly one of preset / values_path.
  std::optional<std::string> preset;
  std::optional<std::filesystem::path> values_path;
  LinkVariant variant = LinkVariant::strict;
  IndexingKind indexing = IndexingKind::lex;
  ReductionOrder order = ReductionOrder::generation;
  RingKind ring = RingKind::z2;
  int q_max = -1;  // -1: dimension of the complex
  std::optional<std::filesystem::path> out;
  bool verify = false;
  // Complexes above this size are certified on sampled submeshes.
  std::size_t max_cells = 2000;
  std::size_t samples = 20;
  std::size_t submesh_cells = 2000;
  std::uint64_t seed = 20140101;
  unsigned threads = 1;
};

// Throws Error(Module::io) for inconsistent settings.
void validate(const RunConfig& config);

enum ExitCode : int { kOk = 0, kUsageError = 1, kInvariantFailure = 2 };

// Runs one command end to end. Reports go to `out`, diagnostics to `err`.
// Returns kInvariantFailure when a matching invariant or the persistence
// check fails.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

Command parse_command(const std::string& name);
LinkVariant parse_variant(const std::string& name);
IndexingKind parse_indexing(const std::string& name);
ReductionOrder parse_order(const std::string& name);
RingKind parse_ring(const std::string& name);

}  // namespace multimorse
