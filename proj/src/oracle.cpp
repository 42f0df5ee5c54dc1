#include "expconv/oracle.hpp"

#include <cmath>

namespace expconv {
namespace oracle {

std::vector<Complex> conv_analog_grid(std::span<const Complex> atom_roots, double t_end,
                                      int steps) {
    if (atom_roots.empty()) throw Error("conv_analog_grid needs at least one atom");
    if (!(t_end > 0.0)) throw Error("conv_analog_grid needs t_end > 0");
    if (steps < 4 || steps % 2 != 0) throw Error("steps must be even and >= 4");
    const int N = steps;
    const double h = t_end / N;

    std::vector<Complex> F(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j)
        F[static_cast<std::size_t>(j)] = std::exp(atom_roots[0] * (h * j));

    std::vector<Complex> G(static_cast<std::size_t>(N) + 1);
    std::vector<Complex> P(static_cast<std::size_t>(N) + 1); // P[d] = e^{r h d}
    for (std::size_t level = 1; level < atom_roots.size(); ++level) {
        const Complex r = atom_roots[level];
        const Complex e1 = std::exp(r * h);
        P[0] = Complex{1.0, 0.0};
        for (int d = 1; d <= N; ++d) P[static_cast<std::size_t>(d)] = P[static_cast<std::size_t>(d - 1)] * e1;

        auto f = [&](int i, int j) {
            return F[static_cast<std::size_t>(j)] * P[static_cast<std::size_t>(i - j)];
        };
        G[0] = Complex{};
        for (int i = 1; i <= N; ++i) {
            Complex acc{};
            if (i == 1) {
                acc = (f(i, 0) + f(i, 1)) * (h / 2.0);
            } else if (i % 2 == 0) {
                acc = f(i, 0) + f(i, i);
                for (int j = 1; j < i; ++j) acc += f(i, j) * ((j % 2) ? 4.0 : 2.0);
                acc *= h / 3.0;
            } else {
                // composite Simpson up to i-3, then a 3/8 tail
                Complex tail = f(i, i - 3) + 3.0 * f(i, i - 2) + 3.0 * f(i, i - 1) + f(i, i);
                tail *= 3.0 * h / 8.0;
                if (i == 3) {
                    acc = tail;
                } else {
                    Complex simp = f(i, 0) + f(i, i - 3);
                    for (int j = 1; j < i - 3; ++j) simp += f(i, j) * ((j % 2) ? 4.0 : 2.0);
                    simp *= h / 3.0;
                    acc = simp + tail;
                }
            }
            G[static_cast<std::size_t>(i)] = acc;
        }
        F = G;
    }
    return F;
}

Complex conv_analog(std::span<const Complex> atom_roots, double t, int steps) {
    if (atom_roots.size() == 1) return std::exp(atom_roots[0] * t);
    return conv_analog_grid(atom_roots, t, steps).back();
}

Refined conv_analog_refined(std::span<const Complex> atom_roots, double t, double rel_tol,
                            int max_steps) {
    int steps = 64;
    Complex prev = conv_analog(atom_roots, t, steps);
    while (steps <= max_steps / 2) {
        steps *= 2;
        const Complex cur = conv_analog(atom_roots, t, steps);
        const double err = std::abs(cur - prev);
        if (err <= rel_tol * std::max(1.0, std::abs(cur))) return {cur, err, steps};
        prev = cur;
    }
    return {prev, std::numeric_limits<double>::quiet_NaN(), steps};
}

std::vector<Complex> sample_h_atom(Complex root, int k_max) {
    std::vector<Complex> s(static_cast<std::size_t>(k_max) + 1, Complex{});
    for (int k = 1; k <= k_max; ++k) s[static_cast<std::size_t>(k)] = ipow(root, k - 1);
    return s;
}

std::vector<Complex> fold_convolve(std::span<const std::vector<Complex>> seqs) {
    if (seqs.empty()) throw Error("fold_convolve needs at least one sequence");
    std::vector<Complex> acc = seqs[0];
    for (std::size_t m = 1; m < seqs.size(); ++m) {
        const auto& s = seqs[m];
        if (s.size() != acc.size()) throw Error("fold_convolve length mismatch");
        std::vector<Complex> out(acc.size(), Complex{});
        for (std::size_t k = 0; k < out.size(); ++k)
            for (std::size_t j = 0; j <= k; ++j) out[k] += acc[j] * s[k - j];
        acc = std::move(out);
    }
    return acc;
}

std::vector<Complex> conv_discrete(const RootMultiset& rm, int k_max) {
    std::vector<std::vector<Complex>> seqs;
    for (const auto& c : rm.clusters())
        for (int i = 0; i < c.multiplicity; ++i) seqs.push_back(sample_h_atom(c.root, k_max));
    return fold_convolve(seqs);
}

std::vector<Complex> rk4_trajectory(const IvpProblem& p, double t_end, double step) {
    if (p.kind != SignalKind::analog) throw Error("rk4_trajectory needs an analog problem");
    const int n = p.order();
    const auto deriv = [&](double t, const std::vector<Complex>& x) {
        std::vector<Complex> d(static_cast<std::size_t>(n));
        for (int i = 0; i + 1 < n; ++i) d[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i) + 1];
        Complex top = eval_input(p, t);
        for (int i = 0; i < n; ++i) top -= p.coeffs[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
        d[static_cast<std::size_t>(n) - 1] = top;
        return d;
    };

    std::vector<Complex> x(p.initial.begin(), p.initial.end());
    const auto steps = static_cast<long long>(std::llround(t_end / step));
    std::vector<Complex> traj;
    traj.reserve(static_cast<std::size_t>(steps) + 1);
    traj.push_back(x[0]);
    auto axpy = [&](const std::vector<Complex>& base, double a, const std::vector<Complex>& v) {
        std::vector<Complex> r(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) r[i] = base[i] + a * v[i];
        return r;
    };
    for (long long s = 0; s < steps; ++s) {
        const double t = step * static_cast<double>(s);
        const auto k1 = deriv(t, x);
        const auto k2 = deriv(t + step / 2.0, axpy(x, step / 2.0, k1));
        const auto k3 = deriv(t + step / 2.0, axpy(x, step / 2.0, k2));
        const auto k4 = deriv(t + step, axpy(x, step, k3));
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += (step / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        traj.push_back(x[0]);
    }
    return traj;
}

std::vector<Complex> iterate_recurrence(const IvpProblem& p, int k_max) {
    if (p.kind != SignalKind::discrete) throw Error("iterate_recurrence needs a discrete problem");
    const int n = p.order();
    std::vector<Complex> y(p.initial.begin(), p.initial.end());
    y.resize(static_cast<std::size_t>(std::max(k_max + 1, n)), Complex{});
    for (int k = 0; k + n <= k_max; ++k) {
        Complex v = eval_input(p, static_cast<double>(k));
        for (int i = 0; i < n; ++i) v -= p.coeffs[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k + i)];
        y[static_cast<std::size_t>(k + n)] = v;
    }
    y.resize(static_cast<std::size_t>(k_max) + 1);
    return y;
}

} // namespace oracle
} // namespace expconv
