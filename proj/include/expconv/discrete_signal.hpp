#pragma once

#include <cstdint>
#include <vector>

#include "expconv/scalar.hpp"

namespace expconv {

/// Shifted h-type mode. With d = shift and m = weights.size(), the value is
///   sum_{j=1..m} weights[j-1] * C(k-d-1, j-1) * root^{k-d-j}   for k >= d+1,
/// zero otherwise. C(k-1, j-1) root^{k-j} is exactly the j-fold self
/// convolution of the unit-sample-response atom root^{k-1} sigma(k-1).
struct DiscreteTerm {
    Complex root; // never zero
    std::vector<Complex> weights;
    int shift{0}; // >= 0
};

struct ImpulseAtom {
    int shift{0}; // support point k = shift, >= 0
    Complex weight;
};

/// Finite sum of discrete terms plus Kronecker impulse atoms. Canonical:
/// one term per (root, shift) pair, trailing zero weights stripped, impulse
/// atoms carry distinct shifts.
class DiscreteSignal {
public:
    DiscreteSignal() = default;

    static DiscreteSignal zero() { return {}; }
    static DiscreteSignal impulse(Complex weight, int shift = 0);
    static DiscreteSignal h_atom(Complex root);          // root^{k-1} sigma(k-1)
    static DiscreteSignal h_power(Complex root, int n);  // n-fold h-type power
    /// e-type combination sum_j a[j] * C(k,j) * root^{k-j} * sigma(k),
    /// stored exactly as a shift-0 term plus an a[0] impulse at k = 0.
    static DiscreteSignal from_e_term(Complex root, const std::vector<Complex>& a);

    const std::vector<DiscreteTerm>& terms() const { return terms_; }
    const std::vector<ImpulseAtom>& impulses() const { return impulses_; }
    bool is_zero() const { return terms_.empty() && impulses_.empty(); }

    void add_term(Complex root, std::vector<Complex> weights, int shift);
    void add_impulse(Complex weight, int shift);

    DiscreteSignal& operator+=(const DiscreteSignal& o);
    friend DiscreteSignal operator+(DiscreteSignal a, const DiscreteSignal& b) { a += b; return a; }
    DiscreteSignal scaled(Complex c) const;
    DiscreteSignal negated() const { return scaled(Complex{-1.0, 0.0}); }

    /// Exact sample value, impulse atoms included.
    Complex evaluate(std::int64_t k) const;

    /// s(k - d), d >= 0 (delay).
    DiscreteSignal shifted(int d) const;

    /// s(k + d), d >= 0, restricted to k >= 0. Exact: requires the advanced
    /// signal to vanish on the lost range (s(j) = 0 for j = 1..d-1 and no
    /// impulse atom below shift d); throws AdvanceOutOfSupport otherwise.
    DiscreteSignal advanced(int d) const;

    /// Value of the term part only (impulse atoms excluded); CSV sampler use.
    Complex evaluate_terms(std::int64_t k) const;

private:
    double coefficient_scale() const;
    std::vector<DiscreteTerm> terms_;
    std::vector<ImpulseAtom> impulses_;
};

} // namespace expconv
