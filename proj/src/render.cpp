#include "expconv/render.hpp"

#include <algorithm>
#include <cstdio>

namespace expconv {

namespace {

std::string fmt(double v, const char* spec) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt17(double v) {
    return fmt(v, "%.17g");
}

std::string poly_term(const std::string& coeff, int j, char var) {
    if (j == 0) return coeff;
    std::string s = coeff + "*" + var;
    if (j >= 2) s += "^" + std::to_string(j);
    return s;
}

// ascending polynomial in `var`; complex coefficients
std::string render_poly_c(const Poly& p, char var, bool* multiple) {
    std::vector<std::string> parts;
    for (int j = 0; j <= p.degree(); ++j) {
        if (p.coeff(j) == Complex{}) continue;
        parts.push_back(poly_term(format_complex(p.coeff(j)), j, var));
    }
    if (multiple) *multiple = parts.size() > 1;
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

std::string render_poly_r(const std::vector<double>& c, char var, bool* multiple) {
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0.0) continue;
        parts.push_back(poly_term(format_number(c[j]), static_cast<int>(j), var));
    }
    if (multiple) *multiple = parts.size() > 1;
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

} // namespace

std::string format_number(double v) {
    return fmt(v, "%.9g");
}

std::string format_complex(Complex v) {
    if (v.imag() == 0.0) return format_number(v.real());
    std::string s = "(" + format_number(v.real());
    if (!(v.imag() < 0.0)) s += "+";
    s += format_number(v.imag()) + "i)";
    return s;
}

std::string render_analog(const AnalogSignal& s) {
    std::vector<AnalogTerm> terms = s.terms();
    std::sort(terms.begin(), terms.end(), [](const AnalogTerm& a, const AnalogTerm& b) {
        return a.root.real() != b.root.real() ? a.root.real() < b.root.real()
                                              : a.root.imag() < b.root.imag();
    });
    std::vector<std::string> parts;
    for (const auto& t : terms) {
        bool multi = false;
        std::string p = render_poly_c(t.poly, 't', &multi);
        if (multi) p = "(" + p + ")";
        if (t.root == Complex{}) {
            parts.push_back(p);
        } else {
            parts.push_back(p + "*exp(" + format_complex(t.root) + "*t)");
        }
    }
    if (s.impulse_weight() != Complex{})
        parts.push_back(format_complex(s.impulse_weight()) + "*delta(t)");
    return join_terms(parts);
}

std::string render_discrete(const DiscretePowerForm& pf) {
    std::vector<std::string> parts;
    for (const auto& t : pf.terms) {
        bool multi = false;
        std::string p = render_poly_c(t.poly, 'k', &multi);
        if (multi) p = "(" + p + ")";
        if (t.root == Complex{1.0, 0.0}) {
            parts.push_back(p);
        } else {
            std::string base = (t.root.imag() == 0.0) ? "(" + format_number(t.root.real()) + ")"
                                                      : format_complex(t.root);
            parts.push_back(p + "*" + base + "^k");
        }
    }
    return join_terms(parts);
}

std::string render_real(const RealForm& f) {
    const char var = (f.kind == SignalKind::analog) ? 't' : 'k';
    std::vector<std::string> parts;
    for (const auto& e : f.entries) {
        std::string env;
        if (f.kind == SignalKind::analog) {
            if (e.decay != 0.0) env = "exp(" + format_number(e.decay) + "*t)";
        } else {
            if (e.decay != 1.0) env = "(" + format_number(e.decay) + ")^k";
        }
        if (e.freq == 0.0) {
            bool multi = false;
            std::string p = render_poly_r(e.cos_poly, var, &multi);
            if (multi) p = "(" + p + ")";
            parts.push_back(env.empty() ? p : p + "*" + env);
            continue;
        }
        std::vector<std::string> trig;
        const std::string arg = format_number(e.freq) + "*" + var;
        if (!e.cos_poly.empty()) {
            bool multi = false;
            std::string p = render_poly_r(e.cos_poly, var, &multi);
            if (multi) p = "(" + p + ")";
            trig.push_back(p + "*cos(" + arg + ")");
        }
        if (!e.sin_poly.empty()) {
            bool multi = false;
            std::string p = render_poly_r(e.sin_poly, var, &multi);
            if (multi) p = "(" + p + ")";
            trig.push_back(p + "*sin(" + arg + ")");
        }
        const std::string inner = join_terms(trig);
        if (env.empty())
            parts.push_back(trig.size() > 1 ? "(" + inner + ")" : inner);
        else
            parts.push_back(env + "*(" + inner + ")");
    }
    if (f.kind == SignalKind::analog)
        for (const auto& im : f.impulses)
            if (im.weight != 0.0) parts.push_back(format_number(im.weight) + "*delta(t)");
    return join_terms(parts);
}

std::vector<std::string> impulse_rows(const DiscretePowerForm& pf) {
    std::vector<std::string> rows;
    for (const auto& im : pf.impulses)
        rows.push_back(format_complex(im.weight) + " @ k=" + std::to_string(im.shift));
    return rows;
}

std::vector<std::string> impulse_rows(const RealForm& f) {
    std::vector<std::string> rows;
    if (f.kind != SignalKind::discrete) return rows;
    for (const auto& im : f.impulses)
        rows.push_back(format_number(im.weight) + " @ k=" + std::to_string(im.shift));
    return rows;
}

std::string render_matrix(const VandermondeSystem& sys) {
    std::string out;
    for (int i = 0; i < sys.n; ++i) {
        out += "[ ";
        for (int j = 0; j < sys.n; ++j) {
            out += format_complex(sys.at(i, j));
            out += (j + 1 < sys.n) ? " " : "";
        }
        out += " ]\n";
    }
    return out;
}

std::string render_cvector(std::span<const Complex> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += format_complex(v[i]);
        if (i + 1 < v.size()) out += ", ";
    }
    return out + ")";
}

void write_csv_analog(std::ostream& os, const AnalogSignal& s, double start, double stop,
                      int count) {
    os << "t,re,im\n";
    const double spacing = (count > 1) ? (stop - start) / (count - 1) : 0.0;
    for (int i = 0; i < count; ++i) {
        const double t = start + spacing * i;
        Complex v{};
        for (const auto& term : s.terms())
            if (t >= 0.0) v += term.poly.eval(Complex{t, 0.0}) * std::exp(term.root * t);
        os << fmt17(t) << "," << fmt17(v.real()) << "," << fmt17(v.imag()) << "\n";
    }
}

void write_csv_discrete(std::ostream& os, const DiscreteSignal& s, std::int64_t k0,
                        std::int64_t k1) {
    // decompose on the power-form basis so the rows match the printed closed
    // form; value + impulse is the exact sample either way
    const DiscretePowerForm pf = to_power_form(s);
    os << "k,value,impulse\n";
    for (std::int64_t k = k0; k <= k1; ++k) {
        Complex v = pf.evaluate(k);
        const ImpulseAtom* hit = nullptr;
        for (const auto& im : pf.impulses)
            if (im.shift == k) {
                hit = &im;
                break;
            }
        if (hit) v -= hit->weight;
        os << k << "," << fmt17(v.real()) << ",";
        if (hit) os << fmt17(hit->weight.real());
        os << "\n";
    }
}

} // namespace expconv
