#pragma once

#include "expconv/analog_signal.hpp"
#include "expconv/discrete_signal.hpp"

namespace expconv {

enum class SignalKind { analog, discrete };

/// One real mode. Analog: e^{decay t} (cos_poly(t) cos(freq t) +
/// sin_poly(t) sin(freq t)). Discrete: decay is the modulus R and freq the
/// phase, R^k (cos_poly(k) cos(freq k) + sin_poly(k) sin(freq k)) sigma(k).
struct RealEntry {
    double decay{0.0};
    double freq{0.0};
    std::vector<double> cos_poly;
    std::vector<double> sin_poly;
};

struct RealImpulse {
    int shift{0}; // analog: always 0 (Dirac at t = 0)
    double weight{0.0};
};

struct RealForm {
    SignalKind kind{SignalKind::analog};
    std::vector<RealEntry> entries;
    std::vector<RealImpulse> impulses;

    /// Pointwise value (analog t / discrete integer k). Same impulse
    /// conventions as the complex signals.
    double evaluate(double x) const;
};

/// Pair conjugate terms into real modes; throws NotConjugateClosed when the
/// term set has no conjugate partner structure or materially complex residue.
RealForm realify(const AnalogSignal& s);
RealForm realify(const DiscreteSignal& s);

/// Discrete display basis: P(k) r^k sigma(k) terms plus impulse rows. The
/// conversion from the shifted binomial basis is exact; mismatches on
/// 0 <= k <= shift are compensated by impulse atoms.
struct PowerTerm {
    Complex root;
    Poly poly; // in k
};

struct DiscretePowerForm {
    std::vector<PowerTerm> terms;
    std::vector<ImpulseAtom> impulses;
    Complex evaluate(std::int64_t k) const;
};

DiscretePowerForm to_power_form(const DiscreteSignal& s);

} // namespace expconv
