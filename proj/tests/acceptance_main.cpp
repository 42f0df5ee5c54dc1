// Release gate: every acceptance criterion in one binary, one line per
// criterion. Exit status = number of failing criteria.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "expconv/ivp.hpp"
#include "expconv/oracle.hpp"

using namespace expconv;

namespace {

const double kPi = std::acos(-1.0);

int failures = 0;
std::vector<std::pair<double, double>> audited; // (residual, ||B||inf) of every solve

void report(int idx, const std::string& what, bool ok, double worst) {
    std::printf("[%s] %2d: %s (worst %.3g)\n", ok ? "PASS" : "FAIL", idx, what.c_str(), worst);
    if (!ok) ++failures;
}

struct Outcome {
    bool ok{false};
    double worst{std::numeric_limits<double>::quiet_NaN()};
};

template <typename Fn>
void run(int idx, const std::string& what, Fn fn) {
    Outcome o;
    std::string label = what;
    try {
        o = fn();
    } catch (const std::exception& e) {
        label += std::string(" [threw: ") + e.what() + "]";
        o = {false, std::numeric_limits<double>::quiet_NaN()};
    }
    report(idx, label, o.ok, o.worst);
}

void audit(const IvpSolution& sol) {
    for (const auto& d : sol.diagnostics) audited.emplace_back(d.residual, d.rhs_inf);
}

void audit(const SolveLog& log) {
    for (const auto& r : log) audited.emplace_back(r.residual, r.rhs_inf);
}

// --- the six reference problems -------------------------------------------

IvpProblem a1() {
    IvpProblem p;
    p.kind = SignalKind::analog;
    p.coeffs = {2.0, 3.0};
    p.initial = {-1.0, 2.0};
    p.input = {{Complex{1.0, 0.0}, Complex{}, 0}};
    return p;
}

IvpProblem a2() {
    IvpProblem p;
    p.kind = SignalKind::analog;
    p.coeffs = {24.0, 20.0, 7.0};
    p.initial = {0.0, 1.0, -3.0};
    p.input = {{Complex{0.0, -0.5}, Complex{0.0, 2.0}, 0},
               {Complex{0.0, 0.5}, Complex{0.0, -2.0}, 0}};
    return p;
}

IvpProblem a3() {
    IvpProblem p;
    p.kind = SignalKind::analog;
    p.coeffs = {4.0, 0.0};
    p.initial = {-2.0, 4.0};
    p.input = {{Complex{0.5, 0.0}, Complex{0.0, 2.0}, 1},
               {Complex{0.5, 0.0}, Complex{0.0, -2.0}, 1}};
    return p;
}

IvpProblem d1() {
    IvpProblem p;
    p.kind = SignalKind::discrete;
    p.coeffs = {-0.125, 0.75, -1.5};
    p.initial = {-1.0, 2.0, 0.8};
    p.input = {{Complex{1.0, 0.0}, Complex{1.0, 0.0}, 0}};
    return p;
}

IvpProblem d2() {
    IvpProblem p;
    p.kind = SignalKind::discrete;
    p.coeffs = {-0.2, 0.9, -1.4};
    p.initial = {2.0, -3.0, 0.5};
    p.input = {{Complex{1.0, 0.0}, Complex{1.0, 0.0}, 1}};
    return p;
}

IvpProblem d3() {
    IvpProblem p;
    p.kind = SignalKind::discrete;
    p.coeffs = {0.0, 1.0, 0.0};
    p.initial = {1.0, 0.0, 0.0};
    p.input = {{Complex{0.0, -0.5}, Complex{0.0, 1.0}, 0},
               {Complex{0.0, 0.5}, Complex{0.0, -1.0}, 0}};
    return p;
}

// ----------------------------------------------------------------------------

Complex coeff_at(const AnalogSignal& s, Complex root, int j) {
    for (const auto& t : s.terms())
        if (same_root(t.root, root)) return t.poly.coeff(j);
    return {};
}

double recurrence_dev(const IvpProblem& p, const IvpSolution& sol, int k_max) {
    const auto ref = oracle::iterate_recurrence(p, k_max);
    double worst = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        worst = std::max(worst, std::abs(sol.d_total.evaluate(k) - ref[kk]) /
                                    std::max(1.0, std::abs(ref[kk])));
    }
    return worst;
}

// random multisets: order <= 6, representatives separated by >= 0.3

Complex separated_root(std::mt19937& rng, const std::vector<Complex>& reps, bool discrete) {
    std::uniform_real_distribution<double> re(-2.5, 1.0), im(-2.0, 2.0);
    std::uniform_real_distribution<double> mod(0.2, 2.0), ang(0.0, 2.0 * kPi);
    for (int tries = 0; tries < 200; ++tries) {
        const Complex r = discrete ? std::polar(mod(rng), ang(rng)) : Complex{re(rng), im(rng)};
        bool far = true;
        for (Complex o : reps) far = far && std::abs(r - o) >= 0.3;
        if (far) return r;
    }
    throw Error("could not separate random roots");
}

RootMultiset random_multiset(std::mt19937& rng, bool discrete) {
    std::uniform_int_distribution<int> order(1, 6), mult(1, 3);
    RootMultiset rm;
    std::vector<Complex> reps;
    int remaining = order(rng);
    while (remaining > 0) {
        const int m = std::min(remaining, mult(rng));
        const Complex r = separated_root(rng, reps, discrete);
        reps.push_back(r);
        rm.add(r, m);
        remaining -= m;
    }
    return rm;
}

std::vector<Complex> expanded_roots(const RootMultiset& rm) {
    std::vector<Complex> out;
    for (const auto& c : rm.clusters())
        for (int i = 0; i < c.multiplicity; ++i) out.push_back(c.root);
    return out;
}

// --- criteria ----------------------------------------------------------------

Outcome criterion1() {
    const IvpProblem p = a1();
    const auto t0 = std::chrono::steady_clock::now();
    const IvpSolution sol = solve_ivp(p);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    audit(sol);

    double worst = 0.0;
    auto dev = [&](Complex got, double want) {
        worst = std::max(worst, std::abs(got - Complex{want, 0.0}));
    };
    dev(coeff_at(sol.a_impulse, Complex{-1.0, 0.0}, 0), 1.0);
    dev(coeff_at(sol.a_impulse, Complex{-2.0, 0.0}, 0), -1.0);
    dev(coeff_at(sol.a_total, Complex{-1.0, 0.0}, 0), -1.0);
    dev(coeff_at(sol.a_total, Complex{-2.0, 0.0}, 0), -0.5);
    dev(coeff_at(sol.a_total, Complex{}, 0), 0.5);
    bool ok = worst <= 1e-9;

    const VerifyReport rep = verify_ivp(p, sol, 0.0, 5.0, 501);
    ok = ok && rep.max_rel_dev <= 1e-6;
    ok = ok && ms < 1000.0;
    return {ok, std::max(worst, rep.max_rel_dev)};
}

Outcome criterion2() {
    const IvpSolution sol = solve_ivp(a2());
    audit(sol);

    double worst = std::abs(coeff_at(sol.a_impulse, Complex{-3.0, 0.0}, 0) - Complex{0.2, 0.0});
    worst = std::max(worst, std::abs(coeff_at(sol.a_impulse, Complex{-2.0, 2.0}, 0) -
                                     Complex{-0.1, -0.05}));
    worst = std::max(worst, std::abs(coeff_at(sol.a_impulse, Complex{-2.0, -2.0}, 0) -
                                     Complex{-0.1, 0.05}));
    bool ok = worst <= 1e-7;

    const RealForm rf = realify(sol.a_total);
    bool saw_exp = false, saw_damped = false, saw_pure = false;
    double tdev = 0.0;
    auto cd = [&](double got, double want) { tdev = std::max(tdev, std::abs(got - want)); };
    for (const auto& e : rf.entries) {
        if (e.freq == 0.0) {
            saw_exp = true;
            cd(e.decay, -3.0);
            cd(e.cos_poly.empty() ? 0.0 : e.cos_poly[0], 0.2307692);
        } else if (e.decay < -1.0) {
            saw_damped = true;
            cd(e.decay, -2.0);
            cd(e.freq, 2.0);
            cd(e.cos_poly.empty() ? 0.0 : e.cos_poly[0], -0.2);
            cd(e.sin_poly.empty() ? 0.0 : e.sin_poly[0], 0.65);
        } else {
            saw_pure = true;
            cd(e.decay, 0.0);
            cd(e.freq, 2.0);
            cd(e.cos_poly.empty() ? 0.0 : e.cos_poly[0], -0.0307692);
            cd(e.sin_poly.empty() ? 0.0 : e.sin_poly[0], -0.0038462);
        }
    }
    ok = ok && saw_exp && saw_damped && saw_pure && rf.entries.size() == 3 && tdev <= 5e-7;
    return {ok, std::max(worst, tdev)};
}

Outcome criterion3() {
    const IvpSolution sol = solve_ivp(a3());
    audit(sol);
    const RealForm rf = realify(sol.a_total);
    if (rf.entries.size() != 1) return {false, std::numeric_limits<double>::quiet_NaN()};
    const RealEntry& e = rf.entries[0];
    double worst = std::max(std::abs(e.decay), std::abs(e.freq - 2.0));
    auto at = [](const std::vector<double>& c, std::size_t j) {
        return j < c.size() ? c[j] : 0.0;
    };
    // 1.96875 sin 2t - 2 cos 2t + 0.0625 t cos 2t + 0.125 t^2 sin 2t
    worst = std::max(worst, std::abs(at(e.cos_poly, 0) - (-2.0)));
    worst = std::max(worst, std::abs(at(e.cos_poly, 1) - 0.0625));
    worst = std::max(worst, std::abs(at(e.cos_poly, 2)));
    worst = std::max(worst, std::abs(at(e.sin_poly, 0) - 1.96875));
    worst = std::max(worst, std::abs(at(e.sin_poly, 1)));
    worst = std::max(worst, std::abs(at(e.sin_poly, 2) - 0.125));
    return {worst <= 1e-9, worst};
}

Outcome criterion4() {
    const IvpProblem p = d1();
    const IvpSolution sol = solve_ivp(p);
    audit(sol);
    const double worst = recurrence_dev(p, sol, 40);
    return {worst <= 1e-9, worst};
}

Outcome criterion5() {
    const IvpProblem p = d2();
    const IvpSolution sol = solve_ivp(p);
    audit(sol);

    double cdev = 0.0;
    auto cd = [&](double got, double want) { cdev = std::max(cdev, std::abs(got - want)); };
    auto at = [](const std::vector<double>& c, std::size_t j) {
        return j < c.size() ? c[j] : 0.0;
    };

    // stage displays: V A = (0,0,1) weights and the homogeneous part for ICs (2,-3,0.5)
    for (const auto& term : sol.d_impulse.terms()) {
        if (std::abs(term.root - Complex{0.4, 0.0}) < 1e-3) {
            cd(std::abs(term.weights[0] - Complex{3.8461538, 0.0}), 0.0);
        } else {
            const double sign = term.root.imag() > 0.0 ? -1.0 : 1.0;
            cd(std::abs(term.weights[0] - Complex{-1.9230769, sign * 0.3846154}), 0.0);
        }
    }
    const RealForm hf = realify(sol.d_homogeneous);
    bool hok = hf.entries.size() == 2;
    if (hok) {
        cd(at(hf.entries[0].cos_poly, 0), 17.307692);
        cd(at(hf.entries[1].cos_poly, 0), -15.307692);
        cd(at(hf.entries[1].sin_poly, 0), -4.5384615);
    }

    // total display; exact coefficients 3275/117, -179/13, 41/13, (10/3)k - 110/9.
    // The ramp mode is pinned independently of the solve path: substituting
    // alpha k + beta into the left side gives 0.3 alpha k + 1.1 alpha + 0.3 beta = k,
    // so alpha = 10/3 and beta = -110/9, and no characteristic root sits at 1.
    const RealForm rf = realify(sol.d_total);
    bool saw_04 = false, saw_pair = false, saw_ramp = false;
    for (const auto& e : rf.entries) {
        if (std::abs(e.decay - 0.4) < 1e-3) {
            saw_04 = true;
            cd(at(e.cos_poly, 0), 27.991453);
        } else if (std::abs(e.decay - 1.0 / std::sqrt(2.0)) < 1e-3) {
            saw_pair = true;
            cd(e.freq, kPi / 4.0);
            cd(at(e.cos_poly, 0), -13.769231);
            cd(at(e.sin_poly, 0), 3.1538462);
        } else {
            saw_ramp = true;
            cd(e.decay, 1.0);
            cd(at(e.cos_poly, 0), -12.222222);
            cd(at(e.cos_poly, 1), 3.3333333);
        }
    }
    bool ok = hok && saw_04 && saw_pair && saw_ramp && cdev <= 1e-5;

    const double rdev = recurrence_dev(p, sol, 40);
    ok = ok && rdev <= 1e-8;
    return {ok, std::max(cdev, rdev)};
}

Outcome criterion6() {
    const IvpProblem p = d3();
    const IvpSolution sol = solve_ivp(p);
    audit(sol);
    double worst = 0.0;
    for (int k = 0; k <= 40; ++k) {
        const double want = (k == 0 ? 2.0 : 0.0) + (0.5 * k - 1.0) * std::cos(0.5 * kPi * k);
        worst = std::max(worst, std::abs(sol.d_total.evaluate(k) - Complex{want, 0.0}));
    }
    worst = std::max(worst, recurrence_dev(p, sol, 40));
    return {worst <= 1e-10, worst};
}

Outcome criterion7() {
    std::mt19937 rng(611953u);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const RootMultiset rm = random_multiset(rng, false);
        const int n = rm.total();
        SolveLog log;
        (void)conv_atoms(rm, &log);
        audit(log);
        const auto prof = derivative_profile(rm, n - 1);
        for (int i = 0; i < n; ++i) {
            const Complex want = (i == n - 1) ? Complex{1.0, 0.0} : Complex{};
            worst = std::max(worst, std::abs(prof[static_cast<std::size_t>(i)] - want));
        }
    }
    for (int rep = 0; rep < 100; ++rep) {
        const RootMultiset rm = random_multiset(rng, true);
        const int n = rm.total();
        SolveLog log;
        (void)dconv_atoms(rm, &log);
        audit(log);
        const auto prof = dvalue_profile(rm);
        for (int k = 0; k <= n; ++k) {
            const Complex want = (k == n) ? Complex{1.0, 0.0} : Complex{};
            worst = std::max(worst, std::abs(prof[static_cast<std::size_t>(k)] - want));
        }
    }
    return {worst <= 1e-9, worst};
}

Outcome criterion8() {
    std::mt19937 rng(742081u);
    double worst = 0.0;

    const std::array<int, 4> nodes{64, 128, 256, 512}; // t = 0.25, 0.5, 1, 2 on the 512 grid
    for (int rep = 0; rep < 100; ++rep) {
        const RootMultiset rm = random_multiset(rng, false);
        SolveLog log;
        const AnalogSignal sig = conv_atoms(rm, &log);
        audit(log);
        const auto roots = expanded_roots(rm);
        const auto coarse = oracle::conv_analog_grid(roots, 2.0, 512);
        const auto fine = oracle::conv_analog_grid(roots, 2.0, 1024);
        std::vector<Complex> finest; // filled only on disagreement
        for (int j : nodes) {
            const double t = 2.0 * j / 512.0;
            Complex ref = fine[static_cast<std::size_t>(2 * j)];
            if (std::abs(coarse[static_cast<std::size_t>(j)] - ref) >
                1e-7 * (1.0 + std::abs(ref))) {
                if (finest.empty()) finest = oracle::conv_analog_grid(roots, 2.0, 2048);
                ref = finest[static_cast<std::size_t>(4 * j)];
            }
            const double dev = std::abs(sig.evaluate(t) - ref) / std::max(1.0, std::abs(ref));
            worst = std::max(worst, dev);
        }
    }
    if (worst > 1e-6) return {false, worst};

    double dworst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const RootMultiset rm = random_multiset(rng, true);
        SolveLog log;
        const DiscreteSignal sig = dconv_atoms(rm, &log);
        audit(log);
        const auto ref = oracle::conv_discrete(rm, 25);
        for (int k = 0; k <= 25; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            dworst = std::max(dworst, std::abs(sig.evaluate(k) - ref[kk]) /
                                          std::max(1.0, std::abs(ref[kk])));
        }
    }
    return {dworst <= 1e-9, std::max(worst, dworst)};
}

Outcome criterion9() {
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
        for (Complex r : {Complex{-0.7, 0.0}, Complex{0.3, 1.1}}) {
            const AnalogSignal s = power_conv(r, n);
            if (s.terms().size() != 1) return {false, std::numeric_limits<double>::quiet_NaN()};
            const Poly& poly = s.terms()[0].poly;
            for (int j = 0; j + 1 < n; ++j) worst = std::max(worst, std::abs(poly.coeff(j)));
            worst = std::max(worst,
                             std::abs(poly.coeff(n - 1) * factorial(n - 1) - Complex{1.0, 0.0}));
        }
    }
    for (int n = 1; n <= 8; ++n) {
        for (double r : {0.8, -1.25, 1.0}) {
            const DiscreteSignal s = dpower_conv_e(Complex{r, 0.0}, n);
            for (int k = 0; k <= 30; ++k) {
                const Complex want = static_cast<double>(binom_i64(n - 1 + k, n - 1)) *
                                     ipow(Complex{r, 0.0}, k);
                worst = std::max(worst,
                                 std::abs(s.evaluate(k) - want) / std::max(1.0, std::abs(want)));
            }
        }
    }
    return {worst <= 1e-12, worst};
}

Outcome criterion10() {
    bool ok = !audited.empty();
    double worst = 0.0;
    for (const auto& [res, rhs] : audited) {
        const double lim = 1e-8 * (1.0 + rhs);
        worst = std::max(worst, res / lim);
        if (!(res <= lim)) ok = false;
    }
    return {ok, worst};
}

} // namespace

int main() {
    run(1, "second-order analog IVP: coefficients, RK4 cross-check, runtime", criterion1);
    run(2, "third-order analog IVP: impulse vector and realified total", criterion2);
    run(3, "resonant analog IVP: repeated-root closed form", criterion3);
    run(4, "discrete triple-root IVP matches the forward recurrence", criterion4);
    run(5, "discrete complex-pair IVP: display coefficients and recurrence", criterion5);
    run(6, "discrete zero-root IVP: impulse correction, exact recurrence", criterion6);
    run(7, "unit value/derivative profile of 200 random atom convolutions", criterion7);
    run(8, "200 random convolutions against quadrature/summation oracles", criterion8);
    run(9, "n-fold self-convolution factorial/binomial identities", criterion9);
    run(10,
        "all " + std::to_string(audited.size()) + " audited solve residuals within tolerance",
        criterion10);
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
