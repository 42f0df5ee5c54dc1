#pragma once

#include <vector>

#include "expconv/polynomial.hpp"

namespace expconv {

/// One right-sided mode p(t) * e^{root t} * sigma(t); poly is never zero.
struct AnalogTerm {
    Complex root;
    Poly poly;
};

/// Finite sum of analog terms plus an optional Dirac weight at t = 0.
/// Canonical: at most one term per root (merge tolerance kRootMergeTol),
/// terms with vanished polynomials dropped.
class AnalogSignal {
public:
    AnalogSignal() = default;

    static AnalogSignal zero() { return {}; }
    static AnalogSignal impulse(Complex weight);
    static AnalogSignal atom(Complex root);            // e^{rt} sigma(t)
    static AnalogSignal term(Complex root, Poly poly); // p(t) e^{rt} sigma(t)

    const std::vector<AnalogTerm>& terms() const { return terms_; }
    Complex impulse_weight() const { return impulse_weight_; }
    bool is_zero() const { return terms_.empty() && impulse_weight_ == Complex{}; }

    void add_term(Complex root, const Poly& poly);
    void add_impulse(Complex weight) { impulse_weight_ += weight; }

    AnalogSignal& operator+=(const AnalogSignal& o);
    friend AnalogSignal operator+(AnalogSignal a, const AnalogSignal& b) { a += b; return a; }
    AnalogSignal scaled(Complex c) const;
    AnalogSignal negated() const { return scaled(Complex{-1.0, 0.0}); }

    /// Pointwise value; t = 0 means the right limit. Throws ImpulseAtPoint at
    /// t = 0 when an impulse atom is present.
    Complex evaluate(double t) const;

    /// d/dt on t > 0 extended by the sigma'(t) impulse bookkeeping; the input
    /// impulse weight must be zero (no doublets representable).
    AnalogSignal differentiate_right() const;

    /// Iterated right-derivative values at 0+, orders 0..count-1. Impulse
    /// atoms generated along the way are ignored: this reads the t > 0 branch.
    std::vector<Complex> right_derivatives_at_zero(int count) const;

private:
    std::vector<AnalogTerm> terms_;
    Complex impulse_weight_{};
};

} // namespace expconv
