#pragma once

#include "expconv/analog_signal.hpp"
#include "expconv/vandermonde.hpp"

namespace expconv {

/// Closed-form n-fold convolution of the atoms e^{r_s t} sigma(t) listed in
/// rm (each cluster taken multiplicity times): solve the confluent system
/// with B = (0,..,0,1), then term s carries poly sum_j A_sj t^{j-1}/(j-1)!.
AnalogSignal conv_atoms(const RootMultiset& rm, SolveLog* log = nullptr);

/// Exact n-fold self convolution t^{n-1}/(n-1)! e^{rt} sigma(t); no solve.
AnalogSignal power_conv(Complex root, int n);

/// Bilinear closed-form convolution of two signals, impulse atoms included.
AnalogSignal conv_signals(const AnalogSignal& a, const AnalogSignal& b, SolveLog* log = nullptr);

/// Right-derivative values of conv_atoms(rm) at 0+, orders 0..i_max.
/// By construction equals (0,...,0,1,...) with the 1 at order n-1.
std::vector<Complex> derivative_profile(const RootMultiset& rm, int i_max);

} // namespace expconv
