#pragma once

#include <span>
#include <vector>

#include "expconv/vandermonde.hpp"

namespace expconv {

/// Roots of the monic polynomial x^n + sum coeffs[i] x^i, coeffs ascending,
/// by Aberth-Ehrlich simultaneous iteration (deterministic perturbed-circle
/// start, at most 200 sweeps). Accepts when every |p(root)| is within
/// 1e-8 * max(1, sum |coeffs|); otherwise throws NoConvergence with the best
/// iterate attached.
std::vector<Complex> find_roots(std::span<const Complex> coeffs);

/// Force conjugate symmetry on a root list of a real polynomial: near-real
/// roots lose their imaginary part, the rest are averaged against their best
/// conjugate partner.
std::vector<Complex> conjugate_symmetrize(std::vector<Complex> roots,
                                          double tol = kClusterTolDefault);

/// Greedy single-linkage clustering; roots link when within
/// tol * max(1, max(|a|,|b|)). Representative = arithmetic mean. Throws
/// AmbiguousClustering when two representatives sit within twice the
/// threshold of each other.
RootMultiset cluster(std::span<const Complex> roots, double tol = kClusterTolDefault);

/// Newton-polish each representative on p^(m-1) (simple root there for a true
/// m-fold root). A step is kept only when it reduces |p^(m-1)| and stays near
/// the original representative. coeffs as in find_roots.
RootMultiset refine_multiset(const RootMultiset& rm, std::span<const Complex> coeffs,
                             double cluster_tol = kClusterTolDefault);

} // namespace expconv
