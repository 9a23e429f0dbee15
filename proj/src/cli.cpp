#include "noethops/cli.hpp"

#include <sstream>

#include "json.hpp"
#include "noethops/noetherian.hpp"
#include "noethops/problem.hpp"

namespace noethops {

namespace {

using nlohmann::json;

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json diffop_json(const DiffOp& op) {
    json arr = json::array();
    for (const auto& [m, c] : op.terms())
        arr.push_back({{"monomial", m.e}, {"coefficient", c.to_string()}});
    return arr;
}

json cdiffop_json(const ConstDiffOp<Complex>& op) {
    json arr = json::array();
    for (const auto& [m, c] : op.terms())
        arr.push_back({{"monomial", m.e}, {"coefficient", format_complex(c)}});
    return arr;
}

json interp_json(const InterpolatedDiffOp& op) {
    json arr = json::array();
    for (const auto& [m, c] : op.terms())
        arr.push_back({{"monomial", m.e},
                       {"coefficient",
                        {{"numerator", c.num().to_string()}, {"denominator", c.den().to_string()}}}});
    return arr;
}

template <class Op>
std::string brace_list(const std::vector<Op>& ops) {
    std::string out = "{";
    for (size_t i = 0; i < ops.size(); ++i) {
        if (i) out += ", ";
        out += ops[i].to_string();
    }
    out += "}\n";
    return out;
}

std::string ideal_text(const std::vector<QPoly>& gens) {
    std::string out = "ideal (";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += gens[i].to_string();
    }
    out += ")";
    return out;
}

struct CommandContext {
    const CliInvocation& inv;
    ProblemFile pf;
    std::ostringstream out;

    std::string option_or_flag(const std::string& key, const std::string& dflt) const {
        if (inv.has(key)) return inv.get(key);
        auto it = pf.options.find(key);
        return it == pf.options.end() ? dflt : it->second;
    }

    Ideal named_ideal(const std::string& flag, const std::vector<std::string>& preferred,
                      bool want_prime) const {
        std::string name = inv.get(flag);
        if (name.empty()) {
            for (const auto& p : preferred)
                if (pf.find_ideal(p)) { name = p; break; }
        }
        if (name.empty()) {
            // fall back to declaration order, filtered by kind
            for (const auto& n : pf.ideal_order) {
                if (pf.ideals.at(n).declared_prime == want_prime) { name = n; break; }
            }
        }
        if (name.empty() && !pf.ideal_order.empty()) name = pf.ideal_order.front();
        const auto* ni = pf.find_ideal(name);
        if (!ni)
            fail(Error::Code::BadInput,
                 want_prime ? "no prime ideal declared; add 'prime P = ...;' or pass --prime"
                            : "no ideal declared in the problem file");
        return Ideal(pf.ring, ni->generators);
    }

    std::vector<int> dependent_set() const {
        std::string spec = option_or_flag("dependent", "");
        if (spec.empty()) fail(Error::Code::BadInput, "the dependent set must be specified");
        std::vector<int> out;
        std::istringstream iss(spec);
        std::string name;
        while (std::getline(iss, name, ',')) {
            size_t a = name.find_first_not_of(" \t");
            size_t b = name.find_last_not_of(" \t");
            if (a == std::string::npos) continue;
            name = name.substr(a, b - a + 1);
            int v = pf.ring->var_index(name);
            if (v < 0) fail(Error::Code::BadInput, "unknown variable '" + name + "' in dependent set");
            out.push_back(v);
        }
        if (out.empty()) fail(Error::Code::BadInput, "the dependent set must be specified");
        return out;
    }

    std::vector<int> eliminate_set() const {
        std::string spec = option_or_flag("eliminate", "");
        if (spec.empty()) fail(Error::Code::BadInput, "--eliminate names at least one variable");
        std::vector<int> out;
        std::istringstream iss(spec);
        std::string name;
        while (std::getline(iss, name, ',')) {
            size_t a = name.find_first_not_of(" \t");
            size_t b = name.find_last_not_of(" \t");
            if (a == std::string::npos) continue;
            name = name.substr(a, b - a + 1);
            int v = pf.ring->var_index(name);
            if (v < 0) fail(Error::Code::BadInput, "unknown variable '" + name + "'");
            out.push_back(v);
        }
        return out;
    }

    Point chosen_point() const {
        if (inv.has("point")) {
            try {
                return Point::complex_point(parse_point(inv.get("point"), pf.ring->arity()));
            } catch (const ParseError& pe) {
                fail(Error::Code::BadInput, pe.diagnostics().front().message);
            }
        }
        std::string name = inv.get("use-point");
        if (name.empty() && !pf.point_order.empty()) name = pf.point_order.front();
        auto it = pf.points.find(name);
        if (it == pf.points.end())
            fail(Error::Code::BadInput, "no point given; pass --point or declare one in the file");
        return Point::complex_point(it->second);
    }

    std::vector<DiffOp> named_operators() const {
        std::string name = inv.get("operators");
        if (name.empty()) {
            if (pf.operators.size() == 1) name = pf.operators.begin()->first;
            else if (pf.operators.count("L")) name = "L";
        }
        auto it = pf.operators.find(name);
        if (it == pf.operators.end())
            fail(Error::Code::BadInput, "no operator list found; declare 'operators L = ...;'");
        return it->second;
    }

    double tol() const {
        std::string t = option_or_flag("tol", "");
        return t.empty() ? 1e-6 : std::stod(t);
    }
    uint64_t seed() const {
        std::string s = option_or_flag("seed", "");
        return s.empty() ? 12345ULL : std::stoull(s);
    }
    DualOptions dual_options() const {
        DualOptions o;
        o.tolerance = tol();
        if (inv.has("degree-cap")) o.degree_cap = std::stoi(inv.get("degree-cap"));
        return o;
    }
    NoetherianOptions noeth_options() const {
        NoetherianOptions o;
        o.dual = dual_options();
        o.sampler.rng_seed = seed();
        o.verify_input = inv.has("verify-input");
        return o;
    }
};

// --subst "x1=x1+x2" (';'-separated list): linear changes of coordinates
// applied to every declared ideal before dispatch
void apply_substitutions(ProblemFile& pf, const std::string& spec) {
    std::vector<QPoly> images;
    for (size_t v = 0; v < pf.ring->arity(); ++v) images.push_back(QPoly::variable(pf.ring, v));
    std::istringstream iss(spec);
    std::string item;
    while (std::getline(iss, item, ';')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos) fail(Error::Code::BadInput, "--subst needs var=expression");
        std::string lhs = item.substr(0, eq);
        size_t a = lhs.find_first_not_of(" \t");
        size_t b = lhs.find_last_not_of(" \t");
        lhs = a == std::string::npos ? "" : lhs.substr(a, b - a + 1);
        int v = pf.ring->var_index(lhs);
        if (v < 0) fail(Error::Code::BadInput, "--subst names an unknown variable '" + lhs + "'");
        images[static_cast<size_t>(v)] = parse_polynomial(item.substr(eq + 1), pf.ring);
    }
    auto substitute = [&](const QPoly& f) {
        QPoly acc = QPoly::zero(pf.ring);
        for (const auto& [m, c] : f.terms()) {
            QPoly t = QPoly::constant(pf.ring, c);
            for (size_t v = 0; v < m.arity(); ++v)
                for (int k = 0; k < m.e[v]; ++k) t = t * images[v];
            acc = acc + t;
        }
        return acc;
    };
    for (auto& [name, ni] : pf.ideals)
        for (auto& g : ni.generators) g = substitute(g);
}

void cmd_hilb_map(CommandContext& ctx) {
    Ideal Q = ctx.named_ideal("ideal", {"Q", "I"}, false);
    Ideal P = ctx.named_ideal("prime", {"P"}, true);
    HilbPoint hp = map_to_punctual_hilbert(Q, P, ctx.noeth_options());

    std::vector<std::string> gens;
    for (const auto& g : hp.idealJ) gens.push_back(g.to_string());
    if (ctx.inv.has("json")) {
        json j;
        j["ideal"] = gens;
        j["multiplicity"] = hp.multiplicity;
        json indep = json::array();
        for (int v : hp.split.independent) indep.push_back(ctx.pf.ring->var_name(v));
        j["independentVariables"] = indep;
        ctx.out << j.dump(2) << "\n";
        return;
    }
    ctx.out << "J = ideal (";
    for (size_t i = 0; i < gens.size(); ++i) ctx.out << (i ? ", " : "") << gens[i];
    ctx.out << ")\nmultiplicity = " << hp.multiplicity << "\n";
}

void cmd_noetherian_ops(CommandContext& ctx) {
    Ideal Q = ctx.named_ideal("ideal", {"Q", "I", "J"}, false);
    Ideal P = ctx.named_ideal("prime", {"P"}, true);
    NoetherianOptions opts = ctx.noeth_options();
    std::string strategy = ctx.option_or_flag("strategy", "punctual-hilbert");

    NoetherianCertificate cert = [&] {
        if (strategy == "punctual-hilbert") return noetherian_operators_punctual(Q, P, opts);
        if (strategy == "macaulay") return noetherian_operators_macaulay(Q, P, opts);
        if (strategy == "hybrid") return noetherian_operators_hybrid(Q, P, opts);
        fail(Error::Code::BadInput, "unknown strategy '" + strategy +
                                        "'; use punctual-hilbert, macaulay, or hybrid");
    }();

    if (ctx.inv.has("json")) {
        json j;
        json prime = json::array();
        for (const auto& g : cert.prime.generators()) prime.push_back(g.to_string());
        j["prime"] = prime;
        json ops = json::array();
        for (const auto& op : cert.operators) ops.push_back(diffop_json(op));
        j["operators"] = ops;
        j["multiplicity"] = cert.multiplicity;
        json indep = json::array();
        for (int v : cert.split.independent) indep.push_back(ctx.pf.ring->var_name(v));
        j["independentVariables"] = indep;
        ctx.out << j.dump(2) << "\n";
        return;
    }
    ctx.out << brace_list(cert.operators);
}

void cmd_specialized_ops(CommandContext& ctx) {
    Ideal I = ctx.named_ideal("ideal", {"Q", "I", "J"}, false);
    Point p = ctx.chosen_point();
    auto ops = specialized_noetherian_operators(I, p, ctx.dependent_set(), ctx.dual_options());
    if (ctx.inv.has("json")) {
        json j;
        json arr = json::array();
        for (const auto& op : ops) arr.push_back(cdiffop_json(op));
        j["operators"] = arr;
        json pt = json::array();
        for (const auto& z : p.coords) pt.push_back(complex_json(z));
        j["point"] = pt;
        ctx.out << j.dump(2) << "\n";
        return;
    }
    ctx.out << brace_list(ops);
}

void cmd_numerical_ops(CommandContext& ctx) {
    Ideal I = ctx.named_ideal("ideal", {"Q", "I", "J"}, false);
    NumericalOptions opts;
    opts.dual = ctx.dual_options();
    opts.sampler.rng_seed = ctx.seed();
    if (!ctx.inv.points_text.empty()) {
        opts.sampler.mode = SamplerConfig::Mode::UserPoints;
        std::istringstream iss(ctx.inv.points_text);
        std::string lineText;
        while (std::getline(iss, lineText)) {
            std::string t;
            for (char c : lineText)
                if (!std::isspace(static_cast<unsigned char>(c))) t += c;
            if (t.empty()) continue;
            opts.sampler.user_points.push_back(parse_point(lineText, ctx.pf.ring->arity()));
        }
    }
    auto ops = numerical_noetherian_operators(I, ctx.dependent_set(), opts);
    if (ctx.inv.has("json")) {
        json j;
        json arr = json::array();
        for (const auto& op : ops) arr.push_back(interp_json(op));
        j["operators"] = arr;
        ctx.out << j.dump(2) << "\n";
        return;
    }
    ctx.out << brace_list(ops);
}

void cmd_ideal_from_ops(CommandContext& ctx) {
    Ideal P = ctx.named_ideal("prime", {"P"}, true);
    auto ops = ctx.named_operators();
    Ideal Q = ideal_from_noetherian_operators(ops, P, ctx.noeth_options());
    if (ctx.inv.has("json")) {
        json j;
        json gens = json::array();
        for (const auto& g : Q.generators()) gens.push_back(g.to_string());
        j["generators"] = gens;
        ctx.out << j.dump(2) << "\n";
        return;
    }
    ctx.out << ideal_text(Q.generators()) << "\n";
}

json dual_json(const CommandContext& ctx, const DualSpace<Complex>& D) {
    json j;
    json pt = json::array();
    for (const auto& z : D.point) pt.push_back(complex_json(z));
    j["point"] = pt;
    j["tolerance"] = D.tolerance;
    if (D.truncation == kCompleteDual) j["truncation"] = "complete";
    else j["truncation"] = D.truncation;
    json basis = json::array();
    for (const auto& op : D.basis) basis.push_back(cdiffop_json(op));
    j["basis"] = basis;
    (void)ctx;
    return j;
}

void cmd_dual(CommandContext& ctx) {
    Ideal I = ctx.named_ideal("ideal", {"I", "Q", "J"}, false);
    Point p = ctx.chosen_point();
    RingPtr cring = complex_ring_like(ctx.pf.ring);
    auto gens = complex_generators(I, cring);
    DualOptions opts = ctx.dual_options();
    DualSpace<Complex> D = ctx.inv.has("degree")
                               ? truncated_dual(p.coords, gens, std::stoi(ctx.inv.get("degree")), opts)
                               : zero_dimensional_dual(p.coords, gens, opts);
    if (ctx.inv.has("json")) {
        ctx.out << dual_json(ctx, D).dump(2) << "\n";
        return;
    }
    ctx.out << brace_list(D.basis);
}

void cmd_eliminating_dual(CommandContext& ctx) {
    Ideal I = ctx.named_ideal("ideal", {"I", "Q", "J"}, false);
    Point p = ctx.chosen_point();
    if (!ctx.inv.has("degree")) fail(Error::Code::BadInput, "--degree sets the elimination bound");
    RingPtr cring = complex_ring_like(ctx.pf.ring);
    auto gens = complex_generators(I, cring);
    DualSpace<Complex> D = eliminating_dual(p.coords, gens, ctx.eliminate_set(),
                                            std::stoi(ctx.inv.get("degree")), ctx.dual_options());
    if (ctx.inv.has("json")) {
        ctx.out << dual_json(ctx, D).dump(2) << "\n";
        return;
    }
    ctx.out << brace_list(D.basis);
}

void cmd_hilbert(CommandContext& ctx) {
    Ideal I = ctx.named_ideal("ideal", {"I", "Q", "J"}, false);
    Point p = ctx.chosen_point();
    std::string range = ctx.option_or_flag("degrees", "");
    if (range.empty()) fail(Error::Code::BadInput, "--degrees takes a range like 0..2");
    size_t dots = range.find("..");
    int lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) lo = hi = std::stoi(range);
        else {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
    } catch (...) {
        fail(Error::Code::BadInput, "--degrees takes a range like 0..2");
    }
    RingPtr cring = complex_ring_like(ctx.pf.ring);
    auto gens = complex_generators(I, cring);
    DualOptions opts = ctx.dual_options();
    DualSpace<Complex> D = ctx.inv.has("degree")
                               ? truncated_dual(p.coords, gens, std::stoi(ctx.inv.get("degree")), opts)
                               : zero_dimensional_dual(p.coords, gens, opts);
    std::vector<int> values;
    for (int i = lo; i <= hi; ++i) values.push_back(dual_hilbert_function(i, D));
    if (ctx.inv.has("json")) {
        json j;
        j["degrees"] = {{"from", lo}, {"to", hi}};
        j["values"] = values;
        ctx.out << j.dump(2) << "\n";
        return;
    }
    for (size_t i = 0; i < values.size(); ++i) ctx.out << (i ? " " : "") << values[i];
    ctx.out << "\n";
}

void cmd_gcorners(CommandContext& ctx) {
    Ideal I = ctx.named_ideal("ideal", {"I", "Q", "J"}, false);
    Point p = ctx.chosen_point();
    RingPtr cring = complex_ring_like(ctx.pf.ring);
    auto gens = complex_generators(I, cring);
    DualOptions opts = ctx.dual_options();
    if (ctx.inv.has("degree")) opts.degree_cap = std::stoi(ctx.inv.get("degree"));
    bool produce_sb = ctx.inv.has("produce-sb");
    auto res = g_corners<Complex>(p.coords, gens, produce_sb, opts);

    if (ctx.inv.has("json")) {
        json j;
        json corners = json::array();
        for (const auto& m : res.corners) corners.push_back(monomial_to_string(m, *ctx.pf.ring));
        j["corners"] = corners;
        j["complete"] = res.complete;
        if (produce_sb) {
            json sb = json::array();
            for (const auto& f : res.standard_basis) sb.push_back(f.to_string());
            j["standardBasis"] = sb;
        }
        ctx.out << j.dump(2) << "\n";
        return;
    }
    for (size_t i = 0; i < res.corners.size(); ++i)
        ctx.out << (i ? " " : "") << monomial_to_string(res.corners[i], *ctx.pf.ring);
    ctx.out << "\n";
    if (produce_sb) {
        ctx.out << "standard basis:\n";
        for (const auto& f : res.standard_basis) ctx.out << "  " << f.to_string() << "\n";
    }
}

} // namespace

CliResult run_command(const CliInvocation& inv) {
    CliResult res;
    try {
        CommandContext ctx{inv, parse_problem(inv.problem_text), {}};
        if (inv.has("subst")) apply_substitutions(ctx.pf, inv.get("subst"));

        if (inv.command == "noetherian-ops") cmd_noetherian_ops(ctx);
        else if (inv.command == "specialized-ops") cmd_specialized_ops(ctx);
        else if (inv.command == "numerical-ops") cmd_numerical_ops(ctx);
        else if (inv.command == "ideal-from-ops") cmd_ideal_from_ops(ctx);
        else if (inv.command == "dual") cmd_dual(ctx);
        else if (inv.command == "eliminating-dual") cmd_eliminating_dual(ctx);
        else if (inv.command == "hilbert") cmd_hilbert(ctx);
        else if (inv.command == "gcorners") cmd_gcorners(ctx);
        else if (inv.command == "hilb-map") cmd_hilb_map(ctx);
        else fail(Error::Code::BadInput, "unknown command '" + inv.command + "'");

        res.output = ctx.out.str();
        res.exit_code = 0;
    } catch (const ParseError& pe) {
        std::ostringstream err;
        for (const auto& d : pe.diagnostics()) err << "error: " << d.to_string() << "\n";
        res.error = err.str();
        res.exit_code = 1;
    } catch (const Error& e) {
        res.error = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
    } catch (const std::exception& e) {
        res.error = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
    }
    return res;
}

} // namespace noethops
