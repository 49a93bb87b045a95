#include "torictool/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw torictool::ToolError(2, "precondition", "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact toric / torsion / resonance workbench for spectra of local biholomorphisms"};
    app.require_subcommand(1);

    torictool::RunOptions opts;
    long max_degree = 6;
    std::string comin_bound;
    std::vector<std::string> symbol_values;
    std::string phases_path;

    if (const char *env = std::getenv("TORICTOOL_PRECISION")) opts.precision = std::atol(env);

    app.add_option("--max-degree", max_degree, "resonance enumeration bound")->capture_default_str();
    app.add_option("--precision", opts.precision, "mantissa precision in bits")->capture_default_str();
    app.add_flag("--strict", opts.strict, "enable cross-validation passes");
    app.add_option("--comin-bound", comin_bound, "bounded-search bound override");
    app.add_option("--symbol-value", symbol_values, "numeric symbol value, name=expr (repeatable)");

    struct Cmd {
        CLI::App *sub;
        std::string name;
        std::string input;
    };
    std::vector<Cmd> cmds;
    cmds.reserve(8); // option targets must not move once registered
    auto add_cmd = [&](const std::string &name, const std::string &desc, bool takes_phases) {
        CLI::App *sub = app.add_subcommand(name, desc);
        sub->fallthrough(); // global flags may follow the subcommand
        cmds.push_back({sub, name, ""});
        Cmd &c = cmds.back();
        sub->add_option("input", c.input, "input file")->required();
        if (takes_phases) sub->add_option("--phases", phases_path, "phase file for phase-linked eigenvalues");
        return sub;
    };

    add_cmd("analyze", "toric degree, tuple, torsion, classification, verdict", false);
    CLI::App *res = add_cmd("resonances", "enumerate resonant multi-indices", false);
    res->add_option("--coordinate", opts.coordinate, "coordinate j (default: all)");
    add_cmd("classify", "torsion classification only", false);
    add_cmd("simplify", "search for a simple reduced tuple", false);
    add_cmd("normalize", "truncated Poincare-Dulac normalization of a germ", true);
    CLI::App *flw = add_cmd("flow", "time-t flow of a vector field jet", false);
    flw->add_option("--time", opts.time, "flow time (rational or decimal)")->capture_default_str();
    CLI::App *chk = add_cmd("check-commute", "torus-action commutation check", true);
    chk->add_option("--theta", opts.theta, "weight matrix columns, e.g. '3,2,-1;2,3,1'")->required();
    for (auto &c : cmds)
        if (c.name == "analyze")
            c.sub->add_flag("--diagonalizable,!--non-diagonalizable", opts.diagonalizable,
                            "assume the linear part diagonalizable (default) or not");

    CLI11_PARSE(app, argc, argv);

    try {
        opts.max_degree = torictool::Int(max_degree);
        if (!comin_bound.empty()) {
            auto b = torictool::parse_rational(comin_bound);
            if (!b || !torictool::is_integer(*b) || *b < 1)
                throw torictool::ToolError(2, "precondition", "bad --comin-bound");
            opts.comin_bound = torictool::num(*b);
        }
        for (auto &sv : symbol_values) {
            auto eq = sv.find('=');
            if (eq == std::string::npos)
                throw torictool::ToolError(2, "precondition", "--symbol-value expects name=expr");
            opts.symbol_values[sv.substr(0, eq)] = sv.substr(eq + 1);
        }

        for (auto &c : cmds) {
            if (!c.sub->parsed()) continue;
            std::optional<std::string> phases;
            if (!phases_path.empty()) phases = slurp(phases_path);
            nlohmann::ordered_json out = torictool::run_command(c.name, slurp(c.input), phases, opts);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        throw torictool::ToolError(2, "precondition", "no subcommand");
    } catch (const torictool::ToolError &e) {
        nlohmann::ordered_json err;
        err["error"] = {{"kind", e.kind}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return e.code;
    } catch (const std::exception &e) {
        nlohmann::ordered_json err;
        err["error"] = {{"kind", "internal_error"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
