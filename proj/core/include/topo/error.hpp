#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topo {

enum class ErrorKind {
  OrderOutOfRange,
  VertexOutOfRange,
  LoopEdge,
  MalformedGraph6,
  OrderTooLarge,
  DisconnectedGraph,
  SpecViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for every contract violation in the library; callers
// branch on kind() rather than on a class hierarchy.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace topo
