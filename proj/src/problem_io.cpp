#include "expconv/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace expconv {

using nlohmann::json;

namespace {

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const char* where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw ParseError("unknown key '" + item.key() + "' in " + where);
    }
}

double num(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

int integer(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

double field_num(const json& obj, const char* key, double fallback, const char* where) {
    if (!obj.contains(key)) return fallback;
    return num(obj.at(key), (std::string(where) + "." + key).c_str());
}

int field_int(const json& obj, const char* key, int fallback, const char* where) {
    if (!obj.contains(key)) return fallback;
    return integer(obj.at(key), (std::string(where) + "." + key).c_str());
}

std::vector<double> num_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(num(x, what));
    return out;
}

void parse_atom(const json& a, SignalKind kind, std::vector<InputAtom>& out) {
    if (!a.is_object()) throw ParseError("input atom must be an object");
    const bool discrete = kind == SignalKind::discrete;

    if (a.contains("const")) {
        check_keys(a, {"const"}, "input atom");
        out.push_back({Complex{num(a.at("const"), "const"), 0.0},
                       discrete ? Complex{1.0, 0.0} : Complex{}, 0});
        return;
    }
    if (a.contains("poly")) {
        check_keys(a, {"poly"}, "input atom");
        const json& p = a.at("poly");
        if (!p.is_object()) throw ParseError("poly atom must be an object");
        check_keys(p, {"amp", "degree"}, "poly atom");
        out.push_back({Complex{field_num(p, "amp", 1.0, "poly"), 0.0},
                       discrete ? Complex{1.0, 0.0} : Complex{},
                       field_int(p, "degree", 0, "poly")});
        return;
    }
    if (a.contains("cos") || a.contains("sin")) {
        const bool is_sin = a.contains("sin");
        check_keys(a, {is_sin ? "sin" : "cos"}, "input atom");
        const json& t = a.at(is_sin ? "sin" : "cos");
        if (!t.is_object()) throw ParseError("trig atom must be an object");
        const double amp = field_num(t, "amp", 1.0, "trig");
        const int degree = field_int(t, "degree", 0, "trig");
        Complex root_plus;
        if (discrete) {
            check_keys(t, {"amp", "modulus", "phase", "degree"}, "trig atom");
            if (!t.contains("phase")) throw ParseError("discrete trig atom needs 'phase'");
            const double mod = field_num(t, "modulus", 1.0, "trig");
            const double ph = num(t.at("phase"), "phase");
            root_plus = mod * Complex{std::cos(ph), std::sin(ph)};
        } else {
            check_keys(t, {"amp", "freq", "decay", "degree"}, "trig atom");
            if (!t.contains("freq")) throw ParseError("analog trig atom needs 'freq'");
            root_plus = Complex{field_num(t, "decay", 0.0, "trig"), num(t.at("freq"), "freq")};
        }
        // cos -> (a/2, a/2); sin -> (a/2i, -a/2i) on the +/- frequency pair
        const Complex cplus = is_sin ? Complex{0.0, -amp / 2.0} : Complex{amp / 2.0, 0.0};
        const Complex cminus = is_sin ? Complex{0.0, amp / 2.0} : Complex{amp / 2.0, 0.0};
        out.push_back({cplus, root_plus, degree});
        out.push_back({cminus, std::conj(root_plus), degree});
        return;
    }
    check_keys(a, {"amp", "amp_im", "root_re", "root_im", "poly_degree"}, "input atom");
    out.push_back({Complex{field_num(a, "amp", 1.0, "atom"), field_num(a, "amp_im", 0.0, "atom")},
                   Complex{field_num(a, "root_re", 0.0, "atom"), field_num(a, "root_im", 0.0, "atom")},
                   field_int(a, "poly_degree", 0, "atom")});
}

} // namespace

IvpProblem parse_problem_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("problem file must hold a JSON object");
    check_keys(j, {"kind", "coeffs", "initial", "input", "roots", "cluster_tol", "sample"},
               "problem");

    IvpProblem p;
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("problem needs a string 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "analog")
        p.kind = SignalKind::analog;
    else if (kind == "discrete")
        p.kind = SignalKind::discrete;
    else
        throw ParseError("kind must be 'analog' or 'discrete'");

    if (!j.contains("coeffs")) throw ParseError("problem needs 'coeffs'");
    p.coeffs = num_array(j.at("coeffs"), "coeffs");
    if (p.coeffs.empty()) throw ParseError("coeffs must not be empty");
    if (!j.contains("initial")) throw ParseError("problem needs 'initial'");
    p.initial = num_array(j.at("initial"), "initial");
    if (p.initial.size() != p.coeffs.size())
        throw ParseError("initial must list exactly " + std::to_string(p.coeffs.size()) +
                         " values");

    if (j.contains("input")) {
        if (!j.at("input").is_array()) throw ParseError("input must be an array");
        for (const auto& a : j.at("input")) parse_atom(a, p.kind, p.input);
    }

    if (j.contains("roots")) {
        if (!j.at("roots").is_array()) throw ParseError("roots must be an array");
        std::vector<RootCluster> rc;
        for (const auto& r : j.at("roots")) {
            if (!r.is_object()) throw ParseError("root entry must be an object");
            check_keys(r, {"re", "im", "multiplicity"}, "root entry");
            if (!r.contains("re")) throw ParseError("root entry needs 're'");
            RootCluster c;
            c.root = Complex{num(r.at("re"), "re"), field_num(r, "im", 0.0, "root")};
            c.multiplicity = field_int(r, "multiplicity", 1, "root");
            if (c.multiplicity < 1) throw ParseError("root multiplicity must be >= 1");
            rc.push_back(c);
        }
        p.roots_override = std::move(rc);
    }

    if (j.contains("cluster_tol")) {
        p.cluster_tol = num(j.at("cluster_tol"), "cluster_tol");
        if (!(p.cluster_tol > 0.0)) throw ParseError("cluster_tol must be positive");
    }

    if (j.contains("sample")) {
        const json& s = j.at("sample");
        if (!s.is_object()) throw ParseError("sample must be an object");
        check_keys(s, {"start", "stop", "count"}, "sample");
        SampleSpec spec;
        spec.start = field_num(s, "start", 0.0, "sample");
        if (!s.contains("stop")) throw ParseError("sample needs 'stop'");
        spec.stop = num(s.at("stop"), "sample.stop");
        spec.count = field_int(s, "count", 0, "sample");
        if (spec.count < 1) throw ParseError("sample count must be >= 1");
        if (!(spec.stop >= spec.start)) throw ParseError("sample stop must be >= start");
        p.sample = spec;
    }

    try {
        p.validate();
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return p;
}

IvpProblem parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_json(ss.str());
}

std::string dump_normalized(const IvpProblem& p) {
    json j;
    j["kind"] = p.kind == SignalKind::analog ? "analog" : "discrete";
    j["coeffs"] = p.coeffs;
    j["initial"] = p.initial;
    json atoms = json::array();
    for (const auto& a : p.input) {
        json atom;
        atom["amp"] = a.amp.real();
        atom["amp_im"] = a.amp.imag();
        atom["root_re"] = a.root.real();
        atom["root_im"] = a.root.imag();
        atom["poly_degree"] = a.degree;
        atoms.push_back(atom);
    }
    j["input"] = atoms;
    j["cluster_tol"] = p.cluster_tol;
    if (p.roots_override) {
        json roots = json::array();
        for (const auto& c : *p.roots_override) {
            json r;
            r["re"] = c.root.real();
            r["im"] = c.root.imag();
            r["multiplicity"] = c.multiplicity;
            roots.push_back(r);
        }
        j["roots"] = roots;
    }
    if (p.sample) {
        j["sample"] = {{"start", p.sample->start}, {"stop", p.sample->stop},
                       {"count", p.sample->count}};
    }
    return j.dump(2) + "\n";
}

} // namespace expconv
