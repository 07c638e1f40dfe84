#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "curvegraph/birth_death_chain.hpp"
#include "curvegraph/curvature.hpp"
#include "curvegraph/graph.hpp"

namespace curvegraph {

/// Sphere volumes m(S_r) and boundary weights between consecutive spheres.
/// Its curvatures are the sphere averages of the source graph's.
BirthDeathChain associated_bdc(const WeightedGraph& g, const RootedDecomposition& decomp);
BirthDeathChain associated_bdc(const WeightedGraph& g, std::string_view root);

struct ModelFailure {
  std::size_t radius;
  Side side;
  VertexId first;
  VertexId second;
  Rational first_value;
  Rational second_value;
};

struct ModelVerdict {
  bool is_model = true;
  std::vector<ModelFailure> failures;  // at most one per (radius, side)
};

/// Weak spherical symmetry around `root`: k_- and k_+ constant on every
/// sphere where they are defined.
ModelVerdict is_model(const WeightedGraph& g, std::string_view root);
ModelVerdict is_model(const WeightedGraph& g, const RootedDecomposition& decomp);

/// Path graph on labels "0".."R" carrying the chain's measures and weights.
WeightedGraph bdc_as_graph(const BirthDeathChain& chain);

struct SphereVolumeStep {
  std::size_t radius;
  Rational outer_side;  // m(S_r) * avg k_+(r)
  Rational inner_side;  // m(S_{r+1}) * avg k_-(r+1)
  bool holds() const { return outer_side == inner_side; }
};

/// Both sides of m(S_{r+1}) avg k_-(r+1) = m(S_r) avg k_+(r). Requires r + 1 <= horizon.
SphereVolumeStep sphere_volume_step(const WeightedGraph& g, const RootedDecomposition& decomp, std::size_t r);
SphereVolumeStep sphere_volume_step(const BirthDeathChain& chain, std::size_t r);

/// m = 1, b = 1 on {0..n}.
BirthDeathChain make_unweighted_chain(std::size_t n);

/// m(r) = r + 1, b(r, r+1) = (r + 1)^-2 on {0..n}.
BirthDeathChain make_example_gprime(std::size_t n);

/// Two copies of the chain glued at 0, on labels "-R".."R": m(x) = m(|x|),
/// b(x, y) = b(|x|, |x|+1) for neighbors moving away from 0.
WeightedGraph make_mirror_model(const BirthDeathChain& chain);

/// Chain with m(0) = 1, k_+(0) = 1 and k_+(r) = k_-(r) = a_r for r >= 1, so
/// it has the sphere curvatures of the unweighted chain. `a` must start with
/// 1, be positive and nonincreasing; the chain horizon is a.size() - 1.
BirthDeathChain make_ollivier_matching_chain(const std::vector<Rational>& a);

/// The seven-vertex non-spherically-symmetric model graph on w, x, x', y, y', z, z'.
WeightedGraph make_figure1();

/// make_figure1() with b(x', y') lowered from 2 to 1; no longer a model at w.
WeightedGraph make_figure1_perturbed();

}  // namespace curvegraph
