#pragma once

#include "expconv/discrete_signal.hpp"
#include "expconv/vandermonde.hpp"

namespace expconv {

/// Closed-form n-fold convolution of the atoms r_s^{k-1} sigma(k-1) in rm:
/// same confluent solve as the analog case; the solution entries are already
/// the weights over C(k-1, j-1) r^{k-j}. All roots must be nonzero.
DiscreteSignal dconv_atoms(const RootMultiset& rm, SolveLog* log = nullptr);

/// e-type n-fold power C(n-1+k, n-1) r^k sigma(k), stored shift-normalized
/// (h-type weights plus the k = 0 impulse patch). Exact, no solve.
DiscreteSignal dpower_conv_e(Complex root, int n);

/// Bilinear closed-form convolution of two discrete signals.
DiscreteSignal dconv_signals(const DiscreteSignal& a, const DiscreteSignal& b,
                             SolveLog* log = nullptr);

/// Values of dconv_atoms(rm) at k = 0..n; equals (0,...,0,1) by the
/// unit-profile theorem.
std::vector<Complex> dvalue_profile(const RootMultiset& rm);

} // namespace expconv
