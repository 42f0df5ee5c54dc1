#include "expconv/ivp.hpp"

#include <algorithm>
#include <cmath>

#include "expconv/oracle.hpp"
#include "expconv/roots.hpp"

namespace expconv {

void IvpProblem::validate() const {
    if (coeffs.empty()) throw Error("problem order must be >= 1");
    if (initial.size() != coeffs.size())
        throw InsufficientInitialValues("expected " + std::to_string(coeffs.size()) +
                                        " initial values, got " + std::to_string(initial.size()));
    for (double a : coeffs)
        if (!std::isfinite(a)) throw Error("non-finite coefficient");
    for (double y : initial)
        if (!std::isfinite(y)) throw Error("non-finite initial value");
    for (const auto& atom : input) {
        require_finite(atom.amp, "input amplitude");
        require_finite(atom.root, "input root");
        if (atom.degree < 0 || atom.degree > kMaxExactDegree)
            throw DegreeTooHigh("input polynomial degree outside 0.." +
                                std::to_string(kMaxExactDegree));
    }
    if (!(cluster_tol > 0.0)) throw Error("cluster_tol must be positive");
    if (sample && (sample->count < 1 || !(sample->stop >= sample->start)))
        throw Error("bad sample spec");
}

Complex eval_input(const IvpProblem& p, double x) {
    Complex v{};
    if (p.kind == SignalKind::discrete) {
        const auto k = static_cast<std::int64_t>(std::llround(x));
        if (k < 0) return v;
        for (const auto& atom : p.input) {
            double pw = 1.0;
            for (int i = 0; i < atom.degree; ++i) pw *= static_cast<double>(k);
            v += atom.amp * pw * ipow(atom.root, k);
        }
        return v;
    }
    if (x < 0.0) return v;
    for (const auto& atom : p.input) {
        double pw = 1.0;
        for (int i = 0; i < atom.degree; ++i) pw *= x;
        v += atom.amp * pw * std::exp(atom.root * x);
    }
    return v;
}

RootMultiset characteristic_multiset(const IvpProblem& p, int* zero_roots) {
    int zeros = 0;
    RootMultiset rm;
    if (p.roots_override) {
        for (const auto& c : *p.roots_override) {
            if (p.kind == SignalKind::discrete &&
                std::abs(c.root) <= p.cluster_tol * std::max(1.0, std::abs(c.root)))
                zeros += c.multiplicity;
            else
                rm.add(c.root, c.multiplicity);
        }
        if (rm.total() + zeros != p.order())
            throw Error("roots override must account for all " + std::to_string(p.order()) +
                        " characteristic roots");
    } else {
        std::vector<Complex> c(p.coeffs.begin(), p.coeffs.end());
        if (p.kind == SignalKind::discrete)
            while (!c.empty() && c.front() == Complex{}) {
                ++zeros;
                c.erase(c.begin());
            }
        if (!c.empty()) {
            auto roots = find_roots(c);
            roots = conjugate_symmetrize(std::move(roots), p.cluster_tol);
            rm = cluster(roots, p.cluster_tol);
            rm = refine_multiset(rm, c, p.cluster_tol);
            if (p.kind == SignalKind::discrete) {
                RootMultiset keep;
                for (const auto& cl : rm.clusters()) {
                    if (std::abs(cl.root) <= p.cluster_tol)
                        zeros += cl.multiplicity;
                    else
                        keep.add(cl.root, cl.multiplicity);
                }
                rm = keep;
            }
        }
    }
    if (zero_roots) *zero_roots = zeros;
    return rm;
}

namespace {

void relabel(std::vector<StageDiag>& diags, const SolveLog& log, const std::string& stage) {
    for (const auto& rec : log) diags.push_back({stage, rec.residual, rec.rhs_inf});
}

/// k^g = sum_{j=1..g+1} beta_j C(k+j-1, j-1): expand the rising binomial
/// basis and peel off leading coefficients.
std::vector<Complex> e_power_coeffs(int g) {
    std::vector<Poly> basis(static_cast<std::size_t>(g) + 1);
    for (int j = 1; j <= g + 1; ++j) {
        Poly b{Complex{1.0, 0.0}};
        for (int i = 1; i < j; ++i) b = b * Poly{Complex{static_cast<double>(i), 0.0}, Complex{1.0, 0.0}};
        b *= Complex{1.0 / factorial(j - 1), 0.0};
        basis[static_cast<std::size_t>(j - 1)] = b;
    }
    std::vector<Complex> beta(static_cast<std::size_t>(g) + 1, Complex{});
    Poly target = Poly::monomial(g, Complex{1.0, 0.0});
    for (int j = g + 1; j >= 1; --j) {
        const Complex lead = target.coeff(j - 1);
        if (lead == Complex{}) continue;
        const Complex bj = lead / basis[static_cast<std::size_t>(j - 1)].coeff(j - 1);
        beta[static_cast<std::size_t>(j - 1)] = bj;
        target -= basis[static_cast<std::size_t>(j - 1)] * bj;
    }
    return beta;
}

IvpSolution solve_analog(const IvpProblem& p) {
    IvpSolution sol;
    sol.kind = SignalKind::analog;
    sol.char_roots = characteristic_multiset(p);
    const RootMultiset& rm = sol.char_roots;

    SolveLog hlog;
    sol.a_impulse = conv_atoms(rm, &hlog);
    relabel(sol.diagnostics, hlog, "impulse_response");

    sol.char_system = build_confluent(rm);
    std::vector<Complex> init(p.initial.begin(), p.initial.end());
    const std::vector<Complex>& abar = solve_with_rhs(sol.char_system, std::move(init));
    sol.diagnostics.push_back(
        {"homogeneous", sol.char_system.residual, rhs_inf_norm(sol.char_system)});
    std::size_t idx = 0;
    for (const auto& c : rm.clusters()) {
        std::vector<Complex> pc(static_cast<std::size_t>(c.multiplicity));
        for (int j = 1; j <= c.multiplicity; ++j)
            pc[static_cast<std::size_t>(j - 1)] = abar[idx++] / factorial(j - 1);
        sol.a_homogeneous.add_term(c.root, Poly{std::move(pc)});
    }

    int gi = 0;
    for (const auto& atom : p.input) {
        // amp t^g e^{rt} sigma(t) = amp g! h_r^{*(g+1)}
        const Complex cg = atom.amp * factorial(atom.degree);
        const RootMultiset merged = rm.merged_with(RootMultiset::single(atom.root, atom.degree + 1));
        SolveLog plog;
        sol.a_particular += conv_atoms(merged, &plog).scaled(cg);
        relabel(sol.diagnostics, plog, "particular[" + std::to_string(gi++) + "]");
    }

    sol.a_total = sol.a_homogeneous + sol.a_particular;
    return sol;
}

IvpSolution solve_discrete(const IvpProblem& p) {
    IvpSolution sol;
    sol.kind = SignalKind::discrete;
    sol.char_roots = characteristic_multiset(p, &sol.zero_roots);
    const RootMultiset& rm = sol.char_roots;
    const int zeros = sol.zero_roots;
    const int nr = p.order() - zeros;
    if (nr != rm.total())
        throw Error("characteristic multiset does not match reduced order");

    DiscreteSignal h_red, yh_red, yp_red;
    if (nr == 0) {
        h_red = DiscreteSignal::impulse(Complex{1.0, 0.0}); // order-0 identity equation
    } else {
        SolveLog hlog;
        h_red = dconv_atoms(rm, &hlog);
        relabel(sol.diagnostics, hlog, "impulse_response");

        sol.char_system = build_confluent(rm);
        std::vector<Complex> init(p.initial.begin() + zeros, p.initial.end());
        const std::vector<Complex>& abar = solve_with_rhs(sol.char_system, std::move(init));
        sol.diagnostics.push_back(
            {"homogeneous", sol.char_system.residual, rhs_inf_norm(sol.char_system)});
        std::size_t idx = 0;
        for (const auto& c : rm.clusters()) {
            std::vector<Complex> a(abar.begin() + static_cast<std::ptrdiff_t>(idx),
                                   abar.begin() + static_cast<std::ptrdiff_t>(idx) + c.multiplicity);
            idx += static_cast<std::size_t>(c.multiplicity);
            yh_red += DiscreteSignal::from_e_term(c.root, a);
        }
    }

    int gi = 0;
    for (const auto& atom : p.input) {
        if (std::abs(atom.root) < 1e-12)
            throw InputNotExponential("discrete forcing atom needs a nonzero root");
        const auto beta = e_power_coeffs(atom.degree);
        SolveLog plog;
        for (int j = 1; j <= atom.degree + 1; ++j) {
            const Complex bj = beta[static_cast<std::size_t>(j - 1)];
            if (bj == Complex{}) continue;
            // k^g r^k splits over e-type powers; each group advances by its
            // own e-count j, which is exact because the convolution vanishes
            // through order-many leading samples.
            const RootMultiset merged = rm.merged_with(RootMultiset::single(atom.root, j));
            yp_red += dconv_atoms(merged, &plog).advanced(j).scaled(atom.amp * bj);
        }
        relabel(sol.diagnostics, plog, "particular[" + std::to_string(gi++) + "]");
    }

    sol.d_impulse = h_red.shifted(zeros);
    if (zeros == 0) {
        sol.d_homogeneous = yh_red;
        sol.d_particular = yp_red;
        sol.d_total = yh_red + yp_red;
        return sol;
    }

    const DiscreteSignal shifted_total = (yh_red + yp_red).shifted(zeros);
    sol.d_homogeneous = yh_red.shifted(zeros);
    sol.d_particular = yp_red.shifted(zeros);
    sol.d_total = shifted_total;
    // the first `zeros` samples are free; impulse atoms pin them to the data
    for (int i = 0; i < zeros; ++i) {
        const Complex ci = Complex{p.initial[static_cast<std::size_t>(i)], 0.0} -
                           shifted_total.evaluate(i);
        sol.d_homogeneous.add_impulse(ci, i);
        sol.d_total.add_impulse(ci, i);
    }
    return sol;
}

} // namespace

IvpSolution solve_ivp(const IvpProblem& p) {
    p.validate();
    return p.kind == SignalKind::analog ? solve_analog(p) : solve_discrete(p);
}

AnalogSignal analog_impulse_response(const IvpProblem& p) { return solve_ivp(p).a_impulse; }
AnalogSignal analog_homogeneous(const IvpProblem& p) { return solve_ivp(p).a_homogeneous; }
AnalogSignal analog_particular(const IvpProblem& p) { return solve_ivp(p).a_particular; }
DiscreteSignal discrete_impulse_response(const IvpProblem& p) { return solve_ivp(p).d_impulse; }
DiscreteSignal discrete_homogeneous(const IvpProblem& p) { return solve_ivp(p).d_homogeneous; }
DiscreteSignal discrete_particular(const IvpProblem& p) { return solve_ivp(p).d_particular; }

VerifyReport verify_ivp(const IvpProblem& p, const IvpSolution& sol, double start, double stop,
                        int count) {
    VerifyReport rep;
    if (p.kind == SignalKind::discrete) {
        const auto k0 = static_cast<int>(std::ceil(start));
        const auto k1 = static_cast<int>(std::floor(stop));
        if (k1 < k0) throw Error("empty verification range");
        const auto ref = oracle::iterate_recurrence(p, k1);
        for (int k = std::max(k0, 0); k <= k1; ++k) {
            const Complex c = sol.d_total.evaluate(k);
            const double dev = std::abs(c - ref[static_cast<std::size_t>(k)]);
            const double rel = dev / std::max(1.0, std::abs(ref[static_cast<std::size_t>(k)]));
            if (dev > rep.max_abs_dev) rep.worst_at = static_cast<double>(k);
            rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
            rep.max_rel_dev = std::max(rep.max_rel_dev, rel);
            ++rep.samples;
        }
        return rep;
    }

    if (count < 2) throw Error("verification grid needs at least 2 points");
    if (start < 0.0 || stop <= start) throw Error("bad verification range");
    const double spacing = (stop - start) / (count - 1);
    const int substeps = std::max(1, static_cast<int>(std::ceil(spacing / 1e-3)));
    const double step = spacing / substeps;
    const auto traj = oracle::rk4_trajectory(p, stop, step);
    for (int i = 0; i < count; ++i) {
        const auto node = static_cast<std::size_t>(std::llround((start + i * spacing) / step));
        if (node >= traj.size()) break;
        const double t = step * static_cast<double>(node);
        const Complex c = sol.a_total.evaluate(t);
        const double dev = std::abs(c - traj[node]);
        const double rel = dev / std::max(1.0, std::abs(traj[node]));
        if (dev > rep.max_abs_dev) rep.worst_at = t;
        rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
        rep.max_rel_dev = std::max(rep.max_rel_dev, rel);
        ++rep.samples;
    }
    return rep;
}

} // namespace expconv
