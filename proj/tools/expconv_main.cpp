#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "expconv/oracle.hpp"
#include "expconv/problem_io.hpp"
#include "expconv/render.hpp"
#include "expconv/roots.hpp"

namespace {

using namespace expconv;

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

struct GridSpec {
    double start, stop;
    int count;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g{};
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':' ||
        !ss.eof() || g.count < 1 || g.stop < g.start)
        throw ParseError("bad grid spec '" + text + "', expected START:STOP:N");
    return g;
}

// "re[,im][:mult]"
RootCluster parse_root_arg(const std::string& text) {
    RootCluster c;
    std::string body = text;
    if (const auto colon = body.find(':'); colon != std::string::npos) {
        try {
            c.multiplicity = std::stoi(body.substr(colon + 1));
        } catch (...) {
            throw ParseError("bad multiplicity in root '" + text + "'");
        }
        if (c.multiplicity < 1) throw ParseError("root multiplicity must be >= 1");
        body = body.substr(0, colon);
    }
    double re = 0.0, im = 0.0;
    std::istringstream ss(body);
    if (!(ss >> re)) throw ParseError("bad root '" + text + "'");
    if (ss.peek() == ',') {
        ss.get();
        if (!(ss >> im)) throw ParseError("bad root '" + text + "'");
    }
    if (!ss.eof()) throw ParseError("bad root '" + text + "'");
    c.root = Complex{re, im};
    return c;
}

GridSpec effective_grid(const IvpProblem& p, const std::optional<GridSpec>& cli_grid) {
    if (cli_grid) return *cli_grid;
    if (p.sample) return {p.sample->start, p.sample->stop, p.sample->count};
    if (p.kind == SignalKind::analog) return {0.0, 5.0, 501};
    return {0.0, 40.0, 41};
}

void print_signal_block(const std::string& label, const char* lhs, const IvpSolution& sol,
                        const AnalogSignal& a, const DiscreteSignal& d, bool force_complex) {
    std::cout << label << ":\n";
    if (sol.kind == SignalKind::analog) {
        bool realified = false;
        if (!force_complex) {
            try {
                const RealForm rf = realify(a);
                std::cout << "  " << lhs << "(t) = " << render_real(rf) << "\n";
                realified = true;
            } catch (const NotConjugateClosed&) {
            }
        }
        if (!realified) std::cout << "  " << lhs << "(t) = " << render_analog(a) << "\n";
        return;
    }
    bool realified = false;
    if (!force_complex) {
        try {
            const RealForm rf = realify(d);
            std::cout << "  " << lhs << "(k) = " << render_real(rf) << "\n";
            for (const auto& row : impulse_rows(rf)) std::cout << "  impulse: " << row << "\n";
            realified = true;
        } catch (const NotConjugateClosed&) {
        }
    }
    if (!realified) {
        const DiscretePowerForm pf = to_power_form(d);
        std::cout << "  " << lhs << "(k) = " << render_discrete(pf) << "\n";
        for (const auto& row : impulse_rows(pf)) std::cout << "  impulse: " << row << "\n";
    }
}

void write_solution_csv(const std::string& path, const IvpProblem& p, const IvpSolution& sol,
                        const GridSpec& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open CSV output: " + path);
    if (p.kind == SignalKind::analog) {
        write_csv_analog(out, sol.a_total, g.start, g.stop, g.count);
    } else {
        write_csv_discrete(out, sol.d_total, static_cast<std::int64_t>(std::ceil(g.start)),
                           static_cast<std::int64_t>(std::floor(g.stop)));
    }
}

int cmd_solve(const std::string& file, const std::string& csv, bool force_complex,
              bool show_matrix, bool dump_norm, const std::optional<GridSpec>& grid) {
    const IvpProblem p = parse_problem_file(file);
    if (dump_norm) {
        std::cout << dump_normalized(p);
        return kExitOk;
    }
    const IvpSolution sol = solve_ivp(p);
    std::cout << "kind: " << (p.kind == SignalKind::analog ? "analog" : "discrete") << "\n";
    std::cout << "order: " << p.order() << "\n";
    if (show_matrix && sol.char_system.n > 0) {
        std::cout << "characteristic system V (rhs = initial values):\n"
                  << render_matrix(sol.char_system);
        if (sol.char_system.solution)
            std::cout << "coefficients = " << render_cvector(*sol.char_system.solution) << "\n";
    }
    print_signal_block("impulse response", "h", sol, sol.a_impulse, sol.d_impulse, force_complex);
    print_signal_block("homogeneous", "y_h", sol, sol.a_homogeneous, sol.d_homogeneous,
                       force_complex);
    print_signal_block("particular", "y_p", sol, sol.a_particular, sol.d_particular,
                       force_complex);
    print_signal_block("total", "y", sol, sol.a_total, sol.d_total, force_complex);
    for (const auto& d : sol.diagnostics)
        std::cout << "residual[" << d.stage << "] = " << format_number(d.residual) << "\n";
    if (!csv.empty()) write_solution_csv(csv, p, sol, effective_grid(p, grid));
    return kExitOk;
}

int cmd_convolve(bool analog, bool discrete, const std::vector<std::string>& root_args,
                 bool force_complex, bool show_matrix) {
    if (analog == discrete) throw ParseError("convolve needs exactly one of --analog/--discrete");
    RootMultiset rm;
    for (const auto& r : root_args) {
        const RootCluster c = parse_root_arg(r);
        rm.add(c.root, c.multiplicity);
    }
    if (rm.empty()) throw ParseError("convolve needs at least one -r root");

    VandermondeSystem sys;
    if (rm.total() > 1) {
        sys = build_confluent(rm);
        solve(sys);
    } else {
        sys.n = 1;
        sys.matrix = {Complex{1.0, 0.0}};
        sys.rhs = {Complex{1.0, 0.0}};
        sys.solution = std::vector<Complex>{Complex{1.0, 0.0}};
        sys.residual = 0.0;
    }
    std::cout << "A = " << render_cvector(*sys.solution) << "\n";
    if (show_matrix) std::cout << "V =\n" << render_matrix(sys);
    std::cout << "residual = " << format_number(sys.residual) << "\n";

    if (analog) {
        const AnalogSignal s = conv_atoms(rm);
        bool realified = false;
        if (!force_complex && rm.conjugate_closed()) {
            try {
                std::cout << "conv(t) = " << render_real(realify(s)) << "\n";
                realified = true;
            } catch (const NotConjugateClosed&) {
            }
        }
        if (!realified) std::cout << "conv(t) = " << render_analog(s) << "\n";
    } else {
        const DiscreteSignal s = dconv_atoms(rm);
        bool realified = false;
        if (!force_complex && rm.conjugate_closed()) {
            try {
                const RealForm rf = realify(s);
                std::cout << "conv(k) = " << render_real(rf) << "\n";
                for (const auto& row : impulse_rows(rf)) std::cout << "impulse: " << row << "\n";
                realified = true;
            } catch (const NotConjugateClosed&) {
            }
        }
        if (!realified) {
            const DiscretePowerForm pf = to_power_form(s);
            std::cout << "conv(k) = " << render_discrete(pf) << "\n";
            for (const auto& row : impulse_rows(pf)) std::cout << "impulse: " << row << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& file, double tol, const std::optional<GridSpec>& grid) {
    const IvpProblem p = parse_problem_file(file);
    const IvpSolution sol = solve_ivp(p);
    const GridSpec g = effective_grid(p, grid);
    const VerifyReport rep = verify_ivp(p, sol, g.start, g.stop, g.count);
    const bool ok = rep.max_rel_dev <= tol;
    std::cout << "samples: " << rep.samples << "\n";
    std::cout << "max abs deviation: " << format_number(rep.max_abs_dev) << " (at "
              << format_number(rep.worst_at) << ")\n";
    std::cout << "max rel deviation: " << format_number(rep.max_rel_dev) << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << " (tol " << format_number(tol) << ")\n";
    return ok ? kExitOk : kExitTolerance;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form convolution of exponential signals and LTI initial value problems"};
    app.require_subcommand(1);

    std::string solve_file, solve_csv, solve_grid;
    bool solve_real = false, solve_complex = false, solve_matrix = false, solve_dump = false;
    auto* solve_cmd = app.add_subcommand("solve", "solve a problem file in closed form");
    solve_cmd->add_option("problem", solve_file, "problem JSON file")->required();
    solve_cmd->add_option("--csv", solve_csv, "write sampled total to CSV");
    solve_cmd->add_flag("--real", solve_real, "prefer the realified form (default)");
    solve_cmd->add_flag("--complex", solve_complex, "force the complex exponential form");
    solve_cmd->add_flag("--show-matrix", solve_matrix, "print the characteristic system");
    solve_cmd->add_flag("--dump-normalized", solve_dump, "print canonical problem JSON and exit");
    solve_cmd->add_option("--grid", solve_grid, "sampling grid START:STOP:N");

    bool conv_analog = false, conv_discrete = false, conv_complex = false, conv_real = false,
         conv_matrix = false;
    std::vector<std::string> conv_roots;
    auto* conv_cmd = app.add_subcommand("convolve", "closed-form n-fold atom convolution");
    conv_cmd->add_flag("--analog", conv_analog, "atoms e^{rt} sigma(t)");
    conv_cmd->add_flag("--discrete", conv_discrete, "atoms r^{k-1} sigma(k-1)");
    conv_cmd->add_option("-r,--root", conv_roots, "root re[,im][:multiplicity], repeatable");
    conv_cmd->add_flag("--real", conv_real, "prefer the realified form (default)");
    conv_cmd->add_flag("--complex", conv_complex, "force the complex exponential form");
    conv_cmd->add_flag("--show-matrix", conv_matrix, "print the assembled system");

    std::string verify_file, verify_grid;
    double verify_tol = 1e-6;
    auto* verify_cmd = app.add_subcommand("verify", "compare closed form against the numeric oracle");
    verify_cmd->add_option("problem", verify_file, "problem JSON file")->required();
    verify_cmd->add_option("--tol", verify_tol, "relative tolerance (default 1e-6)");
    verify_cmd->add_option("--grid", verify_grid, "grid START:STOP:N");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            std::optional<GridSpec> g;
            if (!solve_grid.empty()) g = parse_grid(solve_grid);
            return cmd_solve(solve_file, solve_csv, solve_complex, solve_matrix, solve_dump, g);
        }
        if (conv_cmd->parsed())
            return cmd_convolve(conv_analog, conv_discrete, conv_roots, conv_complex, conv_matrix);
        if (verify_cmd->parsed()) {
            std::optional<GridSpec> g;
            if (!verify_grid.empty()) g = parse_grid(verify_grid);
            return cmd_verify(verify_file, verify_tol, g);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}
