#include "expconv/real_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace expconv {

namespace {

constexpr double kConjResidueTol = 1e-9;

double poly_scale(const Poly& p) {
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

std::vector<double> real_coeffs(const Poly& p, double factor) {
    std::vector<double> out(p.coeffs().size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = factor * p.coeffs()[j].real();
    return out;
}

std::vector<double> imag_coeffs(const Poly& p, double factor) {
    std::vector<double> out(p.coeffs().size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = factor * p.coeffs()[j].imag();
    return out;
}

void require_real_poly(const Poly& p) {
    const double tol = kConjResidueTol * (1.0 + poly_scale(p));
    for (const auto& c : p.coeffs())
        if (std::abs(c.imag()) > tol)
            throw NotConjugateClosed("materially complex coefficient on a real root");
}

void require_conjugate_polys(const Poly& a, const Poly& b) {
    const double tol = kConjResidueTol * (1.0 + std::max(poly_scale(a), poly_scale(b)));
    if (a.degree() != b.degree())
        throw NotConjugateClosed("conjugate partners carry different polynomial degrees");
    for (int j = 0; j <= a.degree(); ++j)
        if (std::abs(a.coeff(j) - std::conj(b.coeff(j))) > tol)
            throw NotConjugateClosed("conjugate partner polynomial mismatch");
}

double horner(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

void strip_trailing(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

/// Generic pairing pass over (root, poly) modes; `real_entry` and
/// `pair_entry` adapt the analog/discrete parameterizations.
template <typename RealFn, typename PairFn>
std::vector<RealEntry> pair_modes(std::vector<PowerTerm> modes, RealFn real_entry,
                                  PairFn pair_entry) {
    std::vector<RealEntry> entries;
    std::vector<bool> used(modes.size(), false);
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (used[i]) continue;
        const Complex r = modes[i].root;
        if (std::abs(r.imag()) <= kRootMergeTol * std::max(1.0, std::abs(r))) {
            require_real_poly(modes[i].poly);
            entries.push_back(real_entry(r.real(), modes[i].poly));
            used[i] = true;
            continue;
        }
        std::size_t partner = modes.size();
        for (std::size_t j = i + 1; j < modes.size(); ++j)
            if (!used[j] && same_root(modes[j].root, std::conj(r))) {
                partner = j;
                break;
            }
        if (partner == modes.size())
            throw NotConjugateClosed("complex root without a conjugate partner");
        const std::size_t plus = (r.imag() > 0.0) ? i : partner;
        const std::size_t minus = (plus == i) ? partner : i;
        require_conjugate_polys(modes[plus].poly, modes[minus].poly);
        entries.push_back(pair_entry(modes[plus].root, modes[plus].poly));
        used[i] = used[partner] = true;
    }
    for (auto& e : entries) {
        strip_trailing(e.cos_poly);
        strip_trailing(e.sin_poly);
    }
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [](const RealEntry& e) {
                                     return e.cos_poly.empty() && e.sin_poly.empty();
                                 }),
                  entries.end());
    std::sort(entries.begin(), entries.end(), [](const RealEntry& a, const RealEntry& b) {
        return a.decay != b.decay ? a.decay < b.decay : a.freq < b.freq;
    });
    return entries;
}

} // namespace

double RealForm::evaluate(double x) const {
    if (kind == SignalKind::analog) {
        if (x < 0.0) return 0.0;
        if (x == 0.0)
            for (const auto& im : impulses)
                if (im.weight != 0.0) throw ImpulseAtPoint("evaluate at t = 0 with impulse weight");
        double v = 0.0;
        for (const auto& e : entries)
            v += std::exp(e.decay * x) *
                 (horner(e.cos_poly, x) * std::cos(e.freq * x) +
                  horner(e.sin_poly, x) * std::sin(e.freq * x));
        return v;
    }
    const auto k = static_cast<std::int64_t>(std::llround(x));
    double v = 0.0;
    if (k >= 0)
        for (const auto& e : entries)
            v += std::pow(e.decay, static_cast<double>(k)) *
                 (horner(e.cos_poly, static_cast<double>(k)) * std::cos(e.freq * static_cast<double>(k)) +
                  horner(e.sin_poly, static_cast<double>(k)) * std::sin(e.freq * static_cast<double>(k)));
    for (const auto& im : impulses)
        if (im.shift == k) v += im.weight;
    return v;
}

RealForm realify(const AnalogSignal& s) {
    std::vector<PowerTerm> modes;
    modes.reserve(s.terms().size());
    for (const auto& t : s.terms()) modes.push_back({t.root, t.poly});

    RealForm out;
    out.kind = SignalKind::analog;
    out.entries = pair_modes(
        std::move(modes),
        [](double r, const Poly& p) {
            RealEntry e;
            e.decay = r;
            e.freq = 0.0;
            e.cos_poly = real_coeffs(p, 1.0);
            return e;
        },
        [](Complex r, const Poly& p) {
            RealEntry e;
            e.decay = r.real();
            e.freq = r.imag();
            e.cos_poly = real_coeffs(p, 2.0);
            e.sin_poly = imag_coeffs(p, -2.0);
            strip_trailing(e.cos_poly);
            strip_trailing(e.sin_poly);
            return e;
        });
    const Complex w = s.impulse_weight();
    if (std::abs(w.imag()) > kConjResidueTol * (1.0 + std::abs(w)))
        throw NotConjugateClosed("materially complex impulse weight");
    if (w != Complex{}) out.impulses.push_back({0, w.real()});
    return out;
}

RealForm realify(const DiscreteSignal& s) {
    DiscretePowerForm pf = to_power_form(s);
    RealForm out;
    out.kind = SignalKind::discrete;
    out.entries = pair_modes(
        std::move(pf.terms),
        [](double r, const Poly& p) {
            RealEntry e;
            e.decay = std::abs(r);
            e.freq = (r < 0.0) ? std::numbers::pi : 0.0; // r^k = |r|^k cos(pi k) for r < 0
            e.cos_poly = real_coeffs(p, 1.0);
            return e;
        },
        [](Complex r, const Poly& p) {
            RealEntry e;
            e.decay = std::abs(r);
            e.freq = std::arg(r); // in (0, pi): the +Im member
            e.cos_poly = real_coeffs(p, 2.0);
            e.sin_poly = imag_coeffs(p, -2.0);
            strip_trailing(e.cos_poly);
            strip_trailing(e.sin_poly);
            return e;
        });
    for (const auto& im : pf.impulses) {
        if (std::abs(im.weight.imag()) > kConjResidueTol * (1.0 + std::abs(im.weight)))
            throw NotConjugateClosed("materially complex impulse weight");
        out.impulses.push_back({im.shift, im.weight.real()});
    }
    std::sort(out.impulses.begin(), out.impulses.end(),
              [](const RealImpulse& a, const RealImpulse& b) { return a.shift < b.shift; });
    return out;
}

Complex DiscretePowerForm::evaluate(std::int64_t k) const {
    Complex v{};
    if (k >= 0)
        for (const auto& t : terms) v += t.poly.eval(Complex{static_cast<double>(k), 0.0}) * ipow(t.root, k);
    for (const auto& im : impulses)
        if (im.shift == k) v += im.weight;
    return v;
}

DiscretePowerForm to_power_form(const DiscreteSignal& s) {
    DiscretePowerForm out;
    auto add_power_term = [&](Complex root, const Poly& p) {
        for (auto& t : out.terms)
            if (same_root(t.root, root)) {
                t.poly += p;
                return;
            }
        out.terms.push_back({root, p});
    };
    std::vector<ImpulseAtom> corrections;
    for (const auto& t : s.terms()) {
        const Complex rinv = Complex{1.0, 0.0} / t.root;
        Poly p;
        for (std::size_t j = 1; j <= t.weights.size(); ++j) {
            if (t.weights[j - 1] == Complex{}) continue;
            // C(k - shift - 1, j-1) expanded in k
            Poly b{Complex{1.0, 0.0}};
            for (std::size_t i = 0; i + 1 < j; ++i)
                b = b * Poly{Complex{-static_cast<double>(t.shift + 1 + i), 0.0}, Complex{1.0, 0.0}};
            b *= Complex{1.0 / factorial(static_cast<int>(j) - 1), 0.0};
            p += b * (t.weights[j - 1] * ipow(rinv, t.shift + static_cast<int>(j)));
        }
        add_power_term(t.root, p);
        for (int i = 0; i <= t.shift; ++i) {
            const Complex extra = p.eval(Complex{static_cast<double>(i), 0.0}) * ipow(t.root, i);
            corrections.push_back({i, -extra});
        }
    }

    double scale = 0.0;
    for (const auto& t : out.terms) scale = std::max(scale, poly_scale(t.poly));
    const double drop = 1e-10 * (1.0 + scale);

    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [&](const PowerTerm& t) { return poly_scale(t.poly) <= drop; }),
                    out.terms.end());

    auto add_impulse = [&](int shift, Complex w) {
        for (auto& im : out.impulses)
            if (im.shift == shift) {
                im.weight += w;
                return;
            }
        out.impulses.push_back({shift, w});
    };
    for (const auto& c : corrections) add_impulse(c.shift, c.weight);
    for (const auto& im : s.impulses()) add_impulse(im.shift, im.weight);
    out.impulses.erase(std::remove_if(out.impulses.begin(), out.impulses.end(),
                                      [&](const ImpulseAtom& im) { return std::abs(im.weight) <= drop; }),
                       out.impulses.end());

    std::sort(out.terms.begin(), out.terms.end(), [](const PowerTerm& a, const PowerTerm& b) {
        return a.root.real() != b.root.real() ? a.root.real() < b.root.real()
                                              : a.root.imag() < b.root.imag();
    });
    std::sort(out.impulses.begin(), out.impulses.end(),
              [](const ImpulseAtom& a, const ImpulseAtom& b) { return a.shift < b.shift; });
    return out;
}

} // namespace expconv
