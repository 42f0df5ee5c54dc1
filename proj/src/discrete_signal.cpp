#include "expconv/discrete_signal.hpp"

#include <algorithm>
#include <cmath>

namespace expconv {

namespace {
constexpr double kZeroRootGuard = 1e-12;
}

DiscreteSignal DiscreteSignal::impulse(Complex weight, int shift) {
    DiscreteSignal s;
    s.add_impulse(weight, shift);
    return s;
}

DiscreteSignal DiscreteSignal::h_atom(Complex root) {
    return h_power(root, 1);
}

DiscreteSignal DiscreteSignal::h_power(Complex root, int n) {
    if (n < 1) throw Error("h_power order must be >= 1");
    std::vector<Complex> w(static_cast<std::size_t>(n), Complex{});
    w.back() = Complex{1.0, 0.0};
    DiscreteSignal s;
    s.add_term(root, std::move(w), 0);
    return s;
}

DiscreteSignal DiscreteSignal::from_e_term(Complex root, const std::vector<Complex>& a) {
    DiscreteSignal s;
    s.add_term(root, a, 0); // weights c_j = a[j-1] relative to C(k-1, j-1) r^{k-j}
    return s.advanced(1);   // C(k, j) r^{k-j} sigma(k) = that term advanced by one
}

void DiscreteSignal::add_term(Complex root, std::vector<Complex> weights, int shift) {
    require_finite(root, "term root");
    if (std::abs(root) < kZeroRootGuard)
        throw ZeroRootAtom("discrete term root must be nonzero");
    if (shift < 0) throw Error("term shift must be >= 0");
    while (!weights.empty() && weights.back() == Complex{}) weights.pop_back();
    if (weights.empty()) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->shift == shift && same_root(it->root, root)) {
            if (weights.size() > it->weights.size()) it->weights.resize(weights.size());
            for (std::size_t j = 0; j < weights.size(); ++j) it->weights[j] += weights[j];
            while (!it->weights.empty() && it->weights.back() == Complex{}) it->weights.pop_back();
            if (it->weights.empty()) terms_.erase(it);
            return;
        }
    }
    terms_.push_back({root, std::move(weights), shift});
}

void DiscreteSignal::add_impulse(Complex weight, int shift) {
    require_finite(weight, "impulse weight");
    if (shift < 0) throw Error("impulse shift must be >= 0");
    if (weight == Complex{}) return;
    for (auto it = impulses_.begin(); it != impulses_.end(); ++it) {
        if (it->shift == shift) {
            it->weight += weight;
            if (it->weight == Complex{}) impulses_.erase(it);
            return;
        }
    }
    impulses_.push_back({shift, weight});
}

DiscreteSignal& DiscreteSignal::operator+=(const DiscreteSignal& o) {
    for (const auto& t : o.terms_) add_term(t.root, t.weights, t.shift);
    for (const auto& im : o.impulses_) add_impulse(im.weight, im.shift);
    return *this;
}

DiscreteSignal DiscreteSignal::scaled(Complex c) const {
    DiscreteSignal s;
    for (const auto& t : terms_) {
        auto w = t.weights;
        for (auto& x : w) x *= c;
        s.add_term(t.root, std::move(w), t.shift);
    }
    for (const auto& im : impulses_) s.add_impulse(im.weight * c, im.shift);
    return s;
}

Complex DiscreteSignal::evaluate_terms(std::int64_t k) const {
    Complex v{};
    for (const auto& t : terms_) {
        const std::int64_t x = k - t.shift - 1; // argument of C(x, j-1); support x >= 0
        if (x < 0) continue;
        for (std::size_t j = 1; j <= t.weights.size(); ++j) {
            if (static_cast<std::int64_t>(j) - 1 > x) break;
            v += t.weights[j - 1] * binom(x, static_cast<int>(j) - 1) *
                 ipow(t.root, x - (static_cast<std::int64_t>(j) - 1));
        }
    }
    return v;
}

Complex DiscreteSignal::evaluate(std::int64_t k) const {
    Complex v = evaluate_terms(k);
    for (const auto& im : impulses_)
        if (im.shift == k) v += im.weight;
    return v;
}

DiscreteSignal DiscreteSignal::shifted(int d) const {
    if (d < 0) throw Error("shift must be >= 0");
    DiscreteSignal s;
    for (const auto& t : terms_) s.add_term(t.root, t.weights, t.shift + d);
    for (const auto& im : impulses_) s.add_impulse(im.weight, im.shift + d);
    return s;
}

double DiscreteSignal::coefficient_scale() const {
    double m = 0.0;
    for (const auto& t : terms_)
        for (const auto& w : t.weights) m = std::max(m, std::abs(w));
    for (const auto& im : impulses_) m = std::max(m, std::abs(im.weight));
    return m;
}

DiscreteSignal DiscreteSignal::advanced(int d) const {
    if (d < 0) throw Error("advance must be >= 0");
    if (d == 0) return *this;
    const double tiny = 1e-9 * (1.0 + coefficient_scale());
    for (const auto& im : impulses_)
        if (im.shift < d && std::abs(im.weight) > tiny)
            throw AdvanceOutOfSupport("advance would move an impulse atom below k = 0");
    for (std::int64_t k = 1; k < d; ++k)
        if (std::abs(evaluate(k)) > tiny)
            throw AdvanceOutOfSupport("advance loses nonzero samples below k = 0");

    DiscreteSignal out;
    for (const auto& t : terms_) {
        if (t.shift >= d) {
            out.add_term(t.root, t.weights, t.shift - d);
            continue;
        }
        const int rem = d - t.shift;
        const int m = static_cast<int>(t.weights.size());
        // C(k+rem-1, j-1) r^{k+rem-j} re-expanded over C(k-1, i-1) r^{k-i}:
        // w'_i = sum_{j>=i} w_j C(rem, j-i) r^{rem-(j-i)}; exact for k >= 1.
        std::vector<Complex> w2(static_cast<std::size_t>(m), Complex{});
        for (int i = 1; i <= m; ++i) {
            Complex acc{};
            for (int j = i; j <= std::min(m, i + rem); ++j)
                acc += t.weights[static_cast<std::size_t>(j - 1)] * binom(rem, j - i) *
                       ipow(t.root, rem - (j - i));
            w2[static_cast<std::size_t>(i - 1)] = acc;
        }
        out.add_term(t.root, std::move(w2), 0);
        // k = 0 patch: the advanced term takes the original value at rem.
        Complex at0{};
        for (int j = 1; j <= std::min(m, rem); ++j)
            at0 += t.weights[static_cast<std::size_t>(j - 1)] * binom(rem - 1, j - 1) *
                   ipow(t.root, rem - j);
        out.add_impulse(at0, 0);
    }
    for (const auto& im : impulses_)
        if (im.shift >= d) out.add_impulse(im.weight, im.shift - d);
    return out;
}

} // namespace expconv
