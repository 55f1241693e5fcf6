#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multimorse {

// Subsystem that raised an error; used as the message prefix.
enum class Module {
  complex,
  multifilt,
  indexing,
  matching,
  reduction,
  homology,
  io,
};

std::string_view module_name(Module m);

class Error : public std::runtime_error {
 public:
  Error(Module module, const std::string& message);

  Module module() const noexcept { return module_; }

 private:
  Module module_;
};

}  // namespace multimorse
