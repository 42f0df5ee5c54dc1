#include "expconv/conv_analog.hpp"

namespace expconv {

namespace {

void log_solve(SolveLog* log, const char* stage, const VandermondeSystem& sys) {
    if (log) log->push_back({stage, sys.residual, rhs_inf_norm(sys)});
}

} // namespace

AnalogSignal conv_atoms(const RootMultiset& rm, SolveLog* log) {
    const int n = rm.total();
    if (n < 1) throw Error("conv_atoms needs at least one atom");
    if (n == 1) return AnalogSignal::atom(rm.clusters().front().root);
    if (rm.clusters().size() == 1) return power_conv(rm.clusters().front().root, n);

    VandermondeSystem sys = build_confluent(rm);
    const std::vector<Complex>& a = solve(sys);
    log_solve(log, "conv_atoms", sys);

    AnalogSignal out;
    std::size_t idx = 0;
    for (const auto& c : rm.clusters()) {
        std::vector<Complex> pc(static_cast<std::size_t>(c.multiplicity));
        for (int j = 1; j <= c.multiplicity; ++j)
            pc[static_cast<std::size_t>(j - 1)] = a[idx++] / factorial(j - 1);
        out.add_term(c.root, Poly{std::move(pc)});
    }
    return out;
}

AnalogSignal power_conv(Complex root, int n) {
    if (n < 1) throw Error("power_conv order must be >= 1");
    return AnalogSignal::term(root, Poly::monomial(n - 1, Complex{1.0 / factorial(n - 1), 0.0}));
}

AnalogSignal conv_signals(const AnalogSignal& a, const AnalogSignal& b, SolveLog* log) {
    AnalogSignal out;
    // delta is the unit: delta * x = x, delta * delta = delta
    if (a.impulse_weight() != Complex{})
        for (const auto& tb : b.terms()) out.add_term(tb.root, tb.poly * a.impulse_weight());
    if (b.impulse_weight() != Complex{})
        for (const auto& ta : a.terms()) out.add_term(ta.root, ta.poly * b.impulse_weight());
    out.add_impulse(a.impulse_weight() * b.impulse_weight());

    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            // decompose each polynomial over power-convolution atoms:
            // t^m e^{rt} = m! * h_r^{*(m+1)}
            for (int ma = 0; ma <= ta.poly.degree(); ++ma) {
                const Complex ca = ta.poly.coeff(ma);
                if (ca == Complex{}) continue;
                for (int mb = 0; mb <= tb.poly.degree(); ++mb) {
                    const Complex cb = tb.poly.coeff(mb);
                    if (cb == Complex{}) continue;
                    const Complex w = ca * factorial(ma) * cb * factorial(mb);
                    AnalogSignal piece;
                    if (same_root(ta.root, tb.root)) {
                        piece = power_conv(ta.root, ma + mb + 2);
                    } else {
                        RootMultiset rm;
                        rm.add(ta.root, ma + 1);
                        rm.add(tb.root, mb + 1);
                        piece = conv_atoms(rm, log);
                    }
                    out += piece.scaled(w);
                }
            }
        }
    }
    return out;
}

std::vector<Complex> derivative_profile(const RootMultiset& rm, int i_max) {
    return conv_atoms(rm).right_derivatives_at_zero(i_max + 1);
}

} // namespace expconv
