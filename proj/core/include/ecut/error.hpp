#pragma once

#include <stdexcept>
#include <string>

namespace ecut {

// Every failure raised by the library. Messages are short, lowercase and
// stable; callers and tests match on them.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ecut
