#include "expconv/conv_discrete.hpp"

namespace expconv {

namespace {

void log_solve(SolveLog* log, const char* stage, const VandermondeSystem& sys) {
    if (log) log->push_back({stage, sys.residual, rhs_inf_norm(sys)});
}

void require_nonzero_roots(const RootMultiset& rm) {
    for (const auto& c : rm.clusters())
        if (std::abs(c.root) < 1e-12)
            throw ZeroRootAtom("discrete convolution atom must have a nonzero root");
}

} // namespace

DiscreteSignal dconv_atoms(const RootMultiset& rm, SolveLog* log) {
    const int n = rm.total();
    if (n < 1) throw Error("dconv_atoms needs at least one atom");
    require_nonzero_roots(rm);
    if (rm.clusters().size() == 1) return DiscreteSignal::h_power(rm.clusters().front().root, n);

    VandermondeSystem sys = build_confluent(rm);
    const std::vector<Complex>& a = solve(sys);
    log_solve(log, "dconv_atoms", sys);

    DiscreteSignal out;
    std::size_t idx = 0;
    for (const auto& c : rm.clusters()) {
        std::vector<Complex> w(a.begin() + static_cast<std::ptrdiff_t>(idx),
                               a.begin() + static_cast<std::ptrdiff_t>(idx + c.multiplicity));
        idx += static_cast<std::size_t>(c.multiplicity);
        out.add_term(c.root, std::move(w), 0);
    }
    return out;
}

DiscreteSignal dpower_conv_e(Complex root, int n) {
    if (n < 1) throw Error("dpower_conv_e order must be >= 1");
    // h^{*n}(j) = 0 for j <= n-1, so the advance is exact
    return DiscreteSignal::h_power(root, n).advanced(n);
}

DiscreteSignal dconv_signals(const DiscreteSignal& a, const DiscreteSignal& b, SolveLog* log) {
    DiscreteSignal out;
    for (const auto& ia : a.impulses()) {
        for (const auto& tb : b.terms()) {
            auto w = tb.weights;
            for (auto& x : w) x *= ia.weight;
            out.add_term(tb.root, std::move(w), tb.shift + ia.shift);
        }
        for (const auto& ib : b.impulses()) out.add_impulse(ia.weight * ib.weight, ia.shift + ib.shift);
    }
    for (const auto& ib : b.impulses())
        for (const auto& ta : a.terms()) {
            auto w = ta.weights;
            for (auto& x : w) x *= ib.weight;
            out.add_term(ta.root, std::move(w), ta.shift + ib.shift);
        }

    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            const int shift = ta.shift + tb.shift; // [x]_p * [y]_q = [x*y]_{p+q}
            for (std::size_t j1 = 1; j1 <= ta.weights.size(); ++j1) {
                const Complex w1 = ta.weights[j1 - 1];
                if (w1 == Complex{}) continue;
                for (std::size_t j2 = 1; j2 <= tb.weights.size(); ++j2) {
                    const Complex w2 = tb.weights[j2 - 1];
                    if (w2 == Complex{}) continue;
                    DiscreteSignal piece;
                    if (same_root(ta.root, tb.root)) {
                        piece = DiscreteSignal::h_power(ta.root, static_cast<int>(j1 + j2));
                    } else {
                        RootMultiset rm;
                        rm.add(ta.root, static_cast<int>(j1));
                        rm.add(tb.root, static_cast<int>(j2));
                        piece = dconv_atoms(rm, log);
                    }
                    out += piece.scaled(w1 * w2).shifted(shift);
                }
            }
        }
    }
    return out;
}

std::vector<Complex> dvalue_profile(const RootMultiset& rm) {
    const DiscreteSignal s = dconv_atoms(rm);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(rm.total()) + 1);
    for (int k = 0; k <= rm.total(); ++k) out.push_back(s.evaluate(k));
    return out;
}

} // namespace expconv
