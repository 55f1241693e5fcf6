#include "multimorse/error.hpp"

namespace multimorse {

std::string_view module_name(Module m) {
  switch (m) {
    case Module::complex: return "complex-core";
    case Module::multifilt: return "multifilt";
    case Module::indexing: return "vertex-indexing";
    case Module::matching: return "matching";
    case Module::reduction: return "reduction";
    case Module::homology: return "homology-oracle";
    case Module::io: return "cli-io";
  }
  return "unknown";
}

Error::Error(Module module, const std::string& message)
    : std::runtime_error(std::string(module_name(module)) + ": " + message),
      module_(module) {}

}  // namespace multimorse
