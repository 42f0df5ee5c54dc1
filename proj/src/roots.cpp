#include "expconv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace expconv {

namespace {

// p and p' of the monic polynomial at z.
void eval_monic(std::span<const Complex> coeffs, Complex z, Complex& p, Complex& dp) {
    p = Complex{1.0, 0.0};
    dp = Complex{};
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z + coeffs[static_cast<std::size_t>(i)];
    }
}

double coeff_scale(std::span<const Complex> coeffs) {
    double s = 0.0;
    for (const auto& c : coeffs) s += std::abs(c);
    return std::max(1.0, s);
}

} // namespace

std::vector<Complex> find_roots(std::span<const Complex> coeffs) {
    const int n = static_cast<int>(coeffs.size());
    if (n < 1) throw Error("find_roots needs a polynomial of degree >= 1");
    for (const auto& c : coeffs) require_finite(c, "polynomial coefficient");
    if (n == 1) return {-coeffs[0]};

    double maxc = 0.0;
    for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
    const double radius = 1.0 + maxc; // Cauchy bound on |root|

    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // fixed asymmetric phase keeps the start off real-axis symmetry traps
        const double ang = 2.0 * std::numbers::pi * (i + 0.5) / n + 0.4;
        z[static_cast<std::size_t>(i)] = radius * Complex{std::cos(ang), std::sin(ang)};
    }

    for (int sweep = 0; sweep < 200; ++sweep) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex p, dp;
            eval_monic(coeffs, z[static_cast<std::size_t>(i)], p, dp);
            if (p == Complex{}) continue;
            if (dp == Complex{}) dp = Complex{1e-30, 0.0};
            const Complex newton = p / dp;
            Complex s{};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (diff == Complex{}) diff = Complex{1e-14 * (1.0 + std::abs(z[static_cast<std::size_t>(i)])), 0.0};
                s += Complex{1.0, 0.0} / diff;
            }
            const Complex denom = Complex{1.0, 0.0} - newton * s;
            const Complex w = (std::abs(denom) < 1e-30) ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[static_cast<std::size_t>(i)])));
        }
        if (worst <= 1e-13) break;
    }

    const double accept = kResidualRelTol * coeff_scale(coeffs);
    std::vector<double> residuals(static_cast<std::size_t>(n));
    bool ok = true;
    for (int i = 0; i < n; ++i) {
        Complex p, dp;
        eval_monic(coeffs, z[static_cast<std::size_t>(i)], p, dp);
        residuals[static_cast<std::size_t>(i)] = std::abs(p);
        if (residuals[static_cast<std::size_t>(i)] > accept) ok = false;
    }
    if (!ok)
        throw NoConvergence("root iteration failed the residual acceptance test", z, residuals);
    return z;
}

std::vector<Complex> conjugate_symmetrize(std::vector<Complex> roots, double tol) {
    const auto scale = [](Complex r) { return std::max(1.0, std::abs(r)); };
    std::vector<bool> done(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (done[i]) continue;
        if (std::abs(roots[i].imag()) <= tol * scale(roots[i])) {
            roots[i] = Complex{roots[i].real(), 0.0};
            done[i] = true;
            continue;
        }
        std::size_t best = roots.size();
        double bestd = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (done[j] || roots[i].imag() * roots[j].imag() >= 0.0) continue;
            const double d = std::abs(roots[i] - std::conj(roots[j]));
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        if (best < roots.size() && bestd <= 2.0 * tol * scale(roots[i])) {
            const Complex m = 0.5 * (roots[i] + std::conj(roots[best]));
            roots[i] = m;
            roots[best] = std::conj(m);
            done[i] = done[best] = true;
        }
    }
    return roots;
}

RootMultiset cluster(std::span<const Complex> roots, double tol) {
    const int n = static_cast<int>(roots.size());
    if (n < 1) throw Error("cluster needs at least one root");
    std::vector<int> group(static_cast<std::size_t>(n), -1);
    int groups = 0;
    for (int i = 0; i < n; ++i) {
        if (group[static_cast<std::size_t>(i)] >= 0) continue;
        // breadth-first single linkage from i
        group[static_cast<std::size_t>(i)] = groups;
        std::vector<int> queue{i};
        while (!queue.empty()) {
            const int a = queue.back();
            queue.pop_back();
            for (int b = 0; b < n; ++b) {
                if (group[static_cast<std::size_t>(b)] >= 0) continue;
                const double link =
                    tol * std::max(1.0, std::max(std::abs(roots[static_cast<std::size_t>(a)]),
                                                 std::abs(roots[static_cast<std::size_t>(b)])));
                if (std::abs(roots[static_cast<std::size_t>(a)] - roots[static_cast<std::size_t>(b)]) <= link) {
                    group[static_cast<std::size_t>(b)] = groups;
                    queue.push_back(b);
                }
            }
        }
        ++groups;
    }

    std::vector<RootCluster> clusters(static_cast<std::size_t>(groups));
    std::vector<int> counts(static_cast<std::size_t>(groups), 0);
    std::vector<Complex> sums(static_cast<std::size_t>(groups), Complex{});
    for (int i = 0; i < n; ++i) {
        sums[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])] += roots[static_cast<std::size_t>(i)];
        counts[static_cast<std::size_t>(group[static_cast<std::size_t>(i)])] += 1;
    }
    for (int g = 0; g < groups; ++g)
        clusters[static_cast<std::size_t>(g)] = {sums[static_cast<std::size_t>(g)] /
                                                     static_cast<double>(counts[static_cast<std::size_t>(g)]),
                                                 counts[static_cast<std::size_t>(g)]};

    for (int a = 0; a < groups; ++a)
        for (int b = a + 1; b < groups; ++b) {
            const Complex ra = clusters[static_cast<std::size_t>(a)].root;
            const Complex rb = clusters[static_cast<std::size_t>(b)].root;
            if (std::abs(ra - rb) <=
                2.0 * tol * std::max(1.0, std::max(std::abs(ra), std::abs(rb))))
                throw AmbiguousClustering("cluster representatives within twice the threshold");
        }
    return RootMultiset{std::move(clusters)};
}

RootMultiset refine_multiset(const RootMultiset& rm, std::span<const Complex> coeffs,
                             double cluster_tol) {
    const int n = static_cast<int>(coeffs.size());
    std::vector<RootCluster> out = rm.clusters();
    for (auto& c : out) {
        const int m = c.multiplicity;
        if (m - 1 >= n) continue;
        // q = p^(m-1), monic scaled; since p is monic of degree n this is exact
        std::vector<Complex> q(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = coeffs[static_cast<std::size_t>(i)];
        q[static_cast<std::size_t>(n)] = Complex{1.0, 0.0};
        int deg = n;
        for (int d = 0; d < m - 1; ++d) {
            for (int i = 1; i <= deg; ++i)
                q[static_cast<std::size_t>(i - 1)] = q[static_cast<std::size_t>(i)] * static_cast<double>(i);
            --deg;
        }
        q.resize(static_cast<std::size_t>(deg) + 1);

        auto qval = [&](Complex z, Complex& v, Complex& dv) {
            v = Complex{};
            dv = Complex{};
            for (int i = deg; i >= 0; --i) {
                dv = dv * z + v;
                v = v * z + q[static_cast<std::size_t>(i)];
            }
        };
        Complex z = c.root, v, dv;
        qval(z, v, dv);
        const double v0 = std::abs(v);
        for (int it = 0; it < 60; ++it) {
            if (dv == Complex{}) break;
            const Complex step = v / dv;
            z -= step;
            qval(z, v, dv);
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        const double wander = 10.0 * cluster_tol * std::max(1.0, std::abs(c.root));
        if (std::abs(v) <= v0 && std::abs(z - c.root) <= wander) c.root = z;
    }
    return RootMultiset{std::move(out)};
}

} // namespace expconv
