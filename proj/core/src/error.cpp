#include "topo/error.hpp"

namespace topo {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::SpecViolation: return "SpecViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace topo
