#pragma once

#include <span>
#include <vector>

#include "expconv/ivp.hpp"

namespace expconv {
/// Slow, independent numerical references used to falsify the closed forms.
namespace oracle {

/// Repeated composite-Simpson convolution of the atoms e^{r t} sigma(t) for
/// every listed root (repetition = multiplicity), on a shared uniform grid
/// over [0, t_end] with `steps` intervals. Returns values at all grid nodes.
/// Odd prefixes close with a 3/8 (or trapezoid) tail.
std::vector<Complex> conv_analog_grid(std::span<const Complex> atom_roots, double t_end,
                                      int steps);

/// Grid convolution evaluated at the final node t.
Complex conv_analog(std::span<const Complex> atom_roots, double t, int steps);

struct Refined {
    Complex value;
    double est_error;
    int steps;
};

/// Step-halving wrapper: doubles `steps` until successive values agree to
/// rel_tol or the cap is hit.
Refined conv_analog_refined(std::span<const Complex> atom_roots, double t,
                            double rel_tol = 1e-9, int max_steps = 1 << 18);

/// h-type atom samples r^{k-1} sigma(k-1) for k = 0..k_max.
std::vector<Complex> sample_h_atom(Complex root, int k_max);

/// Exact nested-summation convolution of sampled sequences (all length
/// k_max+1, index = time).
std::vector<Complex> fold_convolve(std::span<const std::vector<Complex>> seqs);

/// n-fold atom convolution for the multiset, by direct summation.
std::vector<Complex> conv_discrete(const RootMultiset& rm, int k_max);

/// Classical fixed-step RK4 on the companion first-order system; returns y
/// at 0, step, 2*step, ..., up to t_end (inclusive within rounding).
std::vector<Complex> rk4_trajectory(const IvpProblem& p, double t_end, double step);

/// Forward iteration of the difference equation; returns y(0..k_max).
std::vector<Complex> iterate_recurrence(const IvpProblem& p, int k_max);

} // namespace oracle
} // namespace expconv
