#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "curvegraph/birth_death_chain.hpp"
#include "curvegraph/graph.hpp"
#include "curvegraph/rational.hpp"

namespace curvegraph {

enum class Side { inner, outer };

std::string_view to_string(Side side);

/// Inner curvature k_-(x): weight from x into the previous sphere over m(x).
/// Zero at the root.
Rational k_minus(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x);

/// Outer curvature k_+(x): weight from x into the next sphere over m(x).
/// Throws HorizonExceeded on the outermost sphere.
Rational k_plus(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x);

struct InnerOuter {
  Rational k_minus;
  Rational k_plus;
};

InnerOuter inner_outer(const WeightedGraph& g, const RootedDecomposition& decomp, VertexIndex x);

/// Measure-weighted sphere average of k_- or k_+ at radius r. Coincides with
/// the curvature of the associated birth-death chain.
Rational average_curvature(const WeightedGraph& g, const RootedDecomposition& decomp, std::size_t r, Side side);

struct VertexCurvature {
  VertexIndex vertex;
  std::size_t radius;
  Rational k_minus;
  std::optional<Rational> k_plus;  // empty on the outermost sphere
};

struct RadiusCurvature {
  std::size_t radius;
  Rational avg_k_minus;
  std::optional<Rational> avg_k_plus;  // empty at the horizon
  Rational sphere_volume;
  std::optional<Rational> boundary;  // total weight between S_r and S_{r+1}

  /// avg k_+ - avg k_-, when the outer side exists.
  std::optional<Rational> t() const;
};

struct CurvatureProfile {
  std::vector<VertexCurvature> per_vertex;  // ordered by (radius, vertex)
  std::vector<RadiusCurvature> per_radius;
  std::size_t horizon = 0;

  /// Last radius with trustworthy outer data; empty when horizon == 0.
  std::optional<std::size_t> valid_radius() const;
};

CurvatureProfile curvature_profile(const WeightedGraph& g, const RootedDecomposition& decomp);

/// Exact Ollivier-Ricci curvature of a vertex pair together with an optimal
/// integer-valued 1-Lipschitz witness.
///
/// The witness is defined on support = {x, y} plus all neighbors of x and y,
/// normalized so that witness(x) = 0 and witness(y) = d(x, y). Among all
/// optimal witnesses the lexicographically smallest one (in vertex order) is
/// returned.
struct OllivierResult {
  VertexIndex x = 0;
  VertexIndex y = 0;
  std::size_t distance = 0;
  Rational value;
  std::vector<VertexIndex> support;  // sorted
  std::vector<Rational> witness;     // parallel to support

  /// Throws Error{unknown_vertex} if v is outside the support.
  const Rational& witness_at(VertexIndex v) const;
};

/// k(x, y) = inf over f in Lip(1) with grad_xy f = 1 of grad_xy (Laplacian f),
/// computed as an exact linear program over the support of x and y.
OllivierResult ollivier_pair(const WeightedGraph& g, VertexIndex x, VertexIndex y);
OllivierResult ollivier_pair(const WeightedGraph& g, std::string_view x, std::string_view y);

/// Checks the three witness invariants (1-Lipschitz on the support, correct
/// gradient along (x, y), value reproduced by the Laplacian of the witness)
/// plus integrality. On failure returns false and describes why.
bool witness_is_valid(const WeightedGraph& g, const OllivierResult& result, std::string* why = nullptr);

/// Memoizes ollivier_pair over unordered vertex pairs.
class OllivierCache {
 public:
  explicit OllivierCache(const WeightedGraph& g) : graph_(&g) {}
  const OllivierResult& pair(VertexIndex x, VertexIndex y);

 private:
  const WeightedGraph* graph_;
  std::map<std::pair<VertexIndex, VertexIndex>, OllivierResult> results_;
};

/// k(r) = min over y in S_r of max over x in S_{r-1}, x ~ y, of k(x, y),
/// for 1 <= r <= horizon.
Rational sphere_curvature(const WeightedGraph& g, const RootedDecomposition& decomp, std::size_t r);
Rational sphere_curvature(const WeightedGraph& g, const RootedDecomposition& decomp, std::size_t r,
                          OllivierCache& cache);

/// Ollivier curvature k(r, R) of a birth-death chain from the closed form
///   [b(R,R-1) - b(R,R+1)] / ((R-r) m(R)) - [b(r,r-1) - b(r,r+1)] / ((R-r) m(r)),
/// with b(0,-1) = 0. Requires 0 <= r < R <= horizon - 1.
Rational bdc_ollivier_closed_form(const BirthDeathChain& chain, std::size_t r, std::size_t R);

/// Chain sphere curvature k(R) = k(R-1, R).
Rational bdc_sphere_curvature(const BirthDeathChain& chain, std::size_t R);

}  // namespace curvegraph
