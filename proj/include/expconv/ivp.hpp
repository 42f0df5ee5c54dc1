#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expconv/analog_signal.hpp"
#include "expconv/conv_analog.hpp"
#include "expconv/conv_discrete.hpp"
#include "expconv/discrete_signal.hpp"
#include "expconv/real_form.hpp"
#include "expconv/vandermonde.hpp"

namespace expconv {

/// Forcing atom: amp * t^degree * e^{root t} (analog) or
/// amp * k^degree * root^k (discrete), both gated by the unit step.
struct InputAtom {
    Complex amp{1.0, 0.0};
    Complex root{};
    int degree{0};
};

struct SampleSpec {
    double start{0.0};
    double stop{0.0};
    int count{0};
};

/// y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = u(t), y^(i)(0) given   (analog)
/// y(k+n) + a_{n-1} y(k+n-1) + ... + a_0 y(k) = u(k), y(0..n-1) given.
struct IvpProblem {
    SignalKind kind{SignalKind::analog};
    std::vector<double> coeffs;  // a_0 .. a_{n-1}, monic order n
    std::vector<double> initial; // length n
    std::vector<InputAtom> input;
    std::optional<std::vector<RootCluster>> roots_override;
    double cluster_tol{kSolverClusterTol};
    std::optional<SampleSpec> sample;

    int order() const { return static_cast<int>(coeffs.size()); }
    void validate() const;
};

struct StageDiag {
    std::string stage;
    double residual;
    double rhs_inf;
};

struct IvpSolution {
    SignalKind kind{SignalKind::analog};
    AnalogSignal a_impulse, a_homogeneous, a_particular, a_total;
    DiscreteSignal d_impulse, d_homogeneous, d_particular, d_total;
    std::vector<StageDiag> diagnostics;
    VandermondeSystem char_system; // the confluent system of the characteristic multiset
    int zero_roots{0};             // discrete only: multiplicity of root 0
    RootMultiset char_roots;       // zero roots excluded
};

/// Characteristic roots as a clustered multiset. Discrete zero roots are
/// detected (exact low-order zero coefficients, plus |rep| <= cluster_tol for
/// explicit overrides), excluded from the multiset and counted separately.
RootMultiset characteristic_multiset(const IvpProblem& p, int* zero_roots = nullptr);

IvpSolution solve_ivp(const IvpProblem& p);

AnalogSignal analog_impulse_response(const IvpProblem& p);
AnalogSignal analog_homogeneous(const IvpProblem& p);
AnalogSignal analog_particular(const IvpProblem& p);
DiscreteSignal discrete_impulse_response(const IvpProblem& p);
DiscreteSignal discrete_homogeneous(const IvpProblem& p);
DiscreteSignal discrete_particular(const IvpProblem& p);

struct VerifyReport {
    double max_abs_dev{0.0};
    double max_rel_dev{0.0}; // |dev| / max(1, |reference|)
    double worst_at{0.0};
    int samples{0};
};

/// Compare the closed-form total against the numeric reference (RK4 on the
/// companion system / forward recurrence) over a grid.
VerifyReport verify_ivp(const IvpProblem& p, const IvpSolution& sol, double start, double stop,
                        int count);

/// Forcing value u at time t (analog) or sample k (discrete, k >= 0).
Complex eval_input(const IvpProblem& p, double x);

} // namespace expconv
