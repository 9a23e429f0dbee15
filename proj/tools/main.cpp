#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "noethops/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noetherian operators, Macaulay dual spaces, and primary-ideal reconstruction"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {
        "noetherian-ops", "specialized-ops", "numerical-ops", "ideal-from-ops",
        "dual",           "eliminating-dual", "hilbert",      "gcorners",
        "hilb-map"};

    struct Shared {
        std::string file;
        std::string strategy, dependent, point, points_file, tol, seed, degree, degrees,
            eliminate, max_degree, degree_cap, ideal, prime, operators, use_point, subst;
        bool json = false, verify_input = false, produce_sb = false;
    };
    std::map<std::string, Shared> args;

    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        Shared& s = args[name];
        sub->add_option("file", s.file, "problem file")->required();
        sub->add_option("--strategy", s.strategy,
                        "punctual-hilbert | macaulay | hybrid");
        sub->add_option("--dependent", s.dependent, "comma-separated dependent variables");
        sub->add_option("--point", s.point, "comma-separated coordinates");
        sub->add_option("--points", s.points_file, "file with one point per line");
        sub->add_option("--tol", s.tol, "numeric kernel tolerance (default 1e-6)");
        sub->add_option("--seed", s.seed, "sampler RNG seed");
        sub->add_option("--degree", s.degree, "truncation or elimination degree");
        sub->add_option("--degrees", s.degrees, "degree range like 0..2");
        sub->add_option("--eliminate", s.eliminate, "variables for eliminating duals");
        sub->add_option("--max-degree", s.max_degree, "interpolation degree cap");
        sub->add_option("--degree-cap", s.degree_cap, "stabilization degree cap");
        sub->add_option("--ideal", s.ideal, "name of the ideal to use");
        sub->add_option("--prime", s.prime, "name of the prime to use");
        sub->add_option("--operators", s.operators, "name of the operator list");
        sub->add_option("--use-point", s.use_point, "name of a point from the file");
        sub->add_option("--subst", s.subst, "variable substitutions var=expr;...");
        sub->add_flag("--json", s.json, "JSON output");
        sub->add_flag("--verify-input", s.verify_input, "spot-check primary/prime inputs");
        sub->add_flag("--produce-sb", s.produce_sb, "also print a standard basis (gcorners)");
    }

    CLI11_PARSE(app, argc, argv);

    for (const auto& name : commands) {
        if (!app.got_subcommand(name)) continue;
        const Shared& s = args[name];
        noethops::CliInvocation inv;
        inv.command = name;
        inv.problem_text = read_file(s.file);
        if (!s.points_file.empty()) inv.points_text = read_file(s.points_file);
        auto set = [&](const char* k, const std::string& v) {
            if (!v.empty()) inv.flags[k] = v;
        };
        set("strategy", s.strategy);
        set("dependent", s.dependent);
        set("point", s.point);
        set("tol", s.tol);
        set("seed", s.seed);
        set("degree", s.degree);
        set("degrees", s.degrees);
        set("eliminate", s.eliminate);
        set("max-degree", s.max_degree);
        set("degree-cap", s.degree_cap);
        set("ideal", s.ideal);
        set("prime", s.prime);
        set("operators", s.operators);
        set("use-point", s.use_point);
        set("subst", s.subst);
        if (s.json) inv.flags["json"] = "1";
        if (s.verify_input) inv.flags["verify-input"] = "1";
        if (s.produce_sb) inv.flags["produce-sb"] = "1";

        noethops::CliResult res = noethops::run_command(inv);
        std::cout << res.output;
        std::cerr << res.error;
        return res.exit_code;
    }
    return 0;
}
