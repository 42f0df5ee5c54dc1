#include "expconv/analog_signal.hpp"

#include <cmath>

namespace expconv {

AnalogSignal AnalogSignal::impulse(Complex weight) {
    require_finite(weight, "impulse weight");
    AnalogSignal s;
    s.impulse_weight_ = weight;
    return s;
}

AnalogSignal AnalogSignal::atom(Complex root) {
    return term(root, Poly{Complex{1.0, 0.0}});
}

AnalogSignal AnalogSignal::term(Complex root, Poly poly) {
    AnalogSignal s;
    s.add_term(root, poly);
    return s;
}

void AnalogSignal::add_term(Complex root, const Poly& poly) {
    require_finite(root, "term root");
    if (poly.is_zero()) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (same_root(it->root, root)) {
            it->poly += poly;
            if (it->poly.is_zero()) terms_.erase(it);
            return;
        }
    }
    terms_.push_back({root, poly});
}

AnalogSignal& AnalogSignal::operator+=(const AnalogSignal& o) {
    for (const auto& t : o.terms_) add_term(t.root, t.poly);
    impulse_weight_ += o.impulse_weight_;
    return *this;
}

AnalogSignal AnalogSignal::scaled(Complex c) const {
    AnalogSignal s;
    for (const auto& t : terms_) s.add_term(t.root, t.poly * c);
    s.impulse_weight_ = impulse_weight_ * c;
    return s;
}

Complex AnalogSignal::evaluate(double t) const {
    if (t < 0.0) return {};
    if (t == 0.0 && impulse_weight_ != Complex{})
        throw ImpulseAtPoint("evaluate at t = 0 with nonzero impulse weight");
    Complex v{};
    for (const auto& term : terms_) v += term.poly.eval(Complex{t, 0.0}) * std::exp(term.root * t);
    return v;
}

AnalogSignal AnalogSignal::differentiate_right() const {
    if (impulse_weight_ != Complex{})
        throw UnsupportedImpulseDerivative("cannot differentiate an impulse atom");
    AnalogSignal d;
    Complex at_zero{};
    for (const auto& term : terms_) {
        at_zero += term.poly.coeff(0);
        d.add_term(term.root, term.poly.derivative() + term.poly * term.root);
    }
    d.impulse_weight_ = at_zero; // p(0) sigma'(t) contribution
    return d;
}

std::vector<Complex> AnalogSignal::right_derivatives_at_zero(int count) const {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<AnalogTerm> cur = terms_;
    for (int i = 0; i < count; ++i) {
        Complex v{};
        for (const auto& term : cur) v += term.poly.coeff(0);
        out.push_back(v);
        for (auto& term : cur) term.poly = term.poly.derivative() + term.poly * term.root;
    }
    return out;
}

} // namespace expconv
