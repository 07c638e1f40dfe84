#include "curvegraph/error.hpp"

namespace curvegraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::invalid_chain: return "InvalidChain";
    case ErrorKind::empty_graph: return "EmptyGraph";
    case ErrorKind::duplicate_vertex: return "DuplicateVertex";
    case ErrorKind::non_positive_measure: return "NonPositiveMeasure";
    case ErrorKind::self_loop: return "SelfLoop";
    case ErrorKind::asymmetric_duplicate_edge: return "AsymmetricDuplicateEdge";
    case ErrorKind::disconnected_graph: return "DisconnectedGraph";
    case ErrorKind::non_positive_edge_weight: return "NonPositiveEdgeWeight";
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::partial_function: return "PartialFunction";
    case ErrorKind::horizon_exceeded: return "HorizonExceeded";
    case ErrorKind::same_vertex: return "SameVertex";
    case ErrorKind::bad_radius_order: return "BadRadiusOrder";
    case ErrorKind::empty_sphere: return "EmptySphere";
    case ErrorKind::sequence_not_nonincreasing: return "SequenceNotNonincreasing";
    case ErrorKind::non_positive_entry: return "NonPositiveEntry";
    case ErrorKind::horizon_mismatch: return "HorizonMismatch";
    case ErrorKind::hypothesis_failed: return "HypothesisFailed";
  }
  return "UnknownError";
}

}  // namespace curvegraph
