#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvegraph {

enum class ErrorKind {
  parse_error,
  invalid_chain,
  empty_graph,
  duplicate_vertex,
  non_positive_measure,
  self_loop,
  asymmetric_duplicate_edge,
  disconnected_graph,
  non_positive_edge_weight,
  unknown_vertex,
  partial_function,
  horizon_exceeded,
  same_vertex,
  bad_radius_order,
  empty_sphere,
  sequence_not_nonincreasing,
  non_positive_entry,
  horizon_mismatch,
  hypothesis_failed,
};

/// CamelCase name used in machine-readable error objects, e.g. "HorizonExceeded".
std::string_view to_string(ErrorKind kind);

/// Domain error. Everything the library rejects is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curvegraph
