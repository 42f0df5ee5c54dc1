#include "expconv/vandermonde.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace expconv {

RootMultiset::RootMultiset(std::vector<RootCluster> clusters) : clusters_(std::move(clusters)) {
    validate();
}

RootMultiset RootMultiset::single(Complex root, int multiplicity) {
    RootMultiset rm;
    rm.add(root, multiplicity);
    return rm;
}

void RootMultiset::add(Complex root, int multiplicity) {
    require_finite(root, "multiset root");
    if (multiplicity < 1) throw Error("multiplicity must be >= 1");
    for (auto& c : clusters_) {
        if (same_root(c.root, root)) {
            c.multiplicity += multiplicity;
            return;
        }
    }
    clusters_.push_back({root, multiplicity});
}

int RootMultiset::total() const {
    int n = 0;
    for (const auto& c : clusters_) n += c.multiplicity;
    return n;
}

RootMultiset RootMultiset::merged_with(const RootMultiset& o) const {
    RootMultiset rm = *this;
    for (const auto& c : o.clusters_) rm.add(c.root, c.multiplicity);
    return rm;
}

bool RootMultiset::conjugate_closed(double tol) const {
    for (const auto& c : clusters_) {
        if (std::abs(c.root.imag()) <= tol * std::max(1.0, std::abs(c.root))) continue;
        bool found = false;
        for (const auto& d : clusters_) {
            if (d.multiplicity == c.multiplicity && same_root(d.root, std::conj(c.root), tol)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

void RootMultiset::validate() const {
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
        require_finite(clusters_[i].root, "multiset root");
        if (clusters_[i].multiplicity < 1) throw Error("multiplicity must be >= 1");
        for (std::size_t j = i + 1; j < clusters_.size(); ++j)
            if (same_root(clusters_[i].root, clusters_[j].root))
                throw DuplicateRoots("multiset roots coincide at merge tolerance");
    }
}

VandermondeSystem build_simple(std::span<const Complex> roots) {
    const int n = static_cast<int>(roots.size());
    if (n < 1) throw Error("build_simple needs at least one root");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (same_root(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)]))
                throw DuplicateRoots("duplicate roots in simple Vandermonde build");
    VandermondeSystem sys;
    sys.n = n;
    sys.matrix.assign(static_cast<std::size_t>(n) * n, Complex{});
    sys.rhs.assign(static_cast<std::size_t>(n), Complex{});
    sys.rhs.back() = Complex{1.0, 0.0};
    sys.column_roots.assign(roots.begin(), roots.end());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) sys.at(i, j) = ipow(roots[static_cast<std::size_t>(j)], i);
    return sys;
}

VandermondeSystem build_confluent(const RootMultiset& rm) {
    const int n = rm.total();
    if (n < 1) throw Error("build_confluent needs a nonempty multiset");
    VandermondeSystem sys;
    sys.n = n;
    sys.matrix.assign(static_cast<std::size_t>(n) * n, Complex{});
    sys.rhs.assign(static_cast<std::size_t>(n), Complex{});
    sys.rhs.back() = Complex{1.0, 0.0};
    sys.column_roots.resize(static_cast<std::size_t>(n));
    int col = 0;
    for (const auto& c : rm.clusters()) {
        for (int j = 1; j <= c.multiplicity; ++j, ++col) {
            sys.column_roots[static_cast<std::size_t>(col)] = c.root;
            for (int i = j; i <= n; ++i)
                sys.at(i - 1, col) = binom(i - 1, j - 1) * ipow(c.root, i - j);
        }
    }
    return sys;
}

double rhs_inf_norm(const VandermondeSystem& sys) {
    double m = 0.0;
    for (const auto& b : sys.rhs) m = std::max(m, std::abs(b));
    return m;
}

namespace {

std::string closest_pair_note(const VandermondeSystem& sys) {
    if (sys.column_roots.size() < 2) return {};
    double best = std::numeric_limits<double>::infinity();
    Complex a{}, b{};
    for (std::size_t i = 0; i < sys.column_roots.size(); ++i)
        for (std::size_t j = i + 1; j < sys.column_roots.size(); ++j) {
            const double d = std::abs(sys.column_roots[i] - sys.column_roots[j]);
            if (d > 0.0 && d < best) {
                best = d;
                a = sys.column_roots[i];
                b = sys.column_roots[j];
            }
        }
    if (!std::isfinite(best)) return {};
    std::ostringstream os;
    os << "; closest distinct roots (" << a.real() << (a.imag() < 0 ? "" : "+") << a.imag()
       << "i) and (" << b.real() << (b.imag() < 0 ? "" : "+") << b.imag() << "i) at distance "
       << best;
    return os.str();
}

} // namespace

const std::vector<Complex>& solve_with_rhs(VandermondeSystem& sys, std::vector<Complex> rhs) {
    const int n = sys.n;
    if (static_cast<int>(rhs.size()) != n) throw Error("rhs length does not match system order");
    sys.rhs = rhs;

    std::vector<Complex> a = sys.matrix; // working copy; sys.matrix kept for the residual
    std::vector<Complex> b = std::move(rhs);
    std::vector<double> scale(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s = std::max(s, std::abs(a[static_cast<std::size_t>(i) * n + j]));
        if (s == 0.0)
            throw NumericallySingular("zero row in Vandermonde system" + closest_pair_note(sys));
        scale[static_cast<std::size_t>(i)] = s;
    }

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = -1.0;
        for (int i = k; i < n; ++i) {
            const double m =
                std::abs(a[static_cast<std::size_t>(i) * n + k]) / scale[static_cast<std::size_t>(i)];
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (std::abs(a[static_cast<std::size_t>(piv) * n + k]) <
            kPivotRelTol * scale[static_cast<std::size_t>(piv)])
            throw NumericallySingular("pivot below threshold in column " + std::to_string(k) +
                                      closest_pair_note(sys));
        if (piv != k) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * n + j],
                          a[static_cast<std::size_t>(k) * n + j]);
            std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(k)]);
            std::swap(scale[static_cast<std::size_t>(piv)], scale[static_cast<std::size_t>(k)]);
        }
        const Complex pivval = a[static_cast<std::size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            const Complex f = a[static_cast<std::size_t>(i) * n + k] / pivval;
            if (f == Complex{}) continue;
            a[static_cast<std::size_t>(i) * n + k] = Complex{};
            for (int j = k + 1; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] -= f * a[static_cast<std::size_t>(k) * n + j];
            b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
        }
    }

    std::vector<Complex> x(static_cast<std::size_t>(n), Complex{});
    for (int i = n - 1; i >= 0; --i) {
        Complex acc = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            acc -= a[static_cast<std::size_t>(i) * n + j] * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = acc / a[static_cast<std::size_t>(i) * n + i];
    }

    double res = 0.0;
    for (int i = 0; i < n; ++i) {
        Complex acc{};
        for (int j = 0; j < n; ++j)
            acc += sys.matrix[static_cast<std::size_t>(i) * n + j] * x[static_cast<std::size_t>(j)];
        res = std::max(res, std::abs(acc - sys.rhs[static_cast<std::size_t>(i)]));
    }
    sys.residual = res;
    sys.solution = std::move(x);
    return *sys.solution;
}

const std::vector<Complex>& solve(VandermondeSystem& sys) {
    return solve_with_rhs(sys, sys.rhs);
}

} // namespace expconv
