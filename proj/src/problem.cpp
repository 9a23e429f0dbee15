#include "noethops/problem.hpp"

#include <cctype>
#include <sstream>

namespace noethops {

namespace {

struct Statement {
    std::string text;
    int line;
};

// split on ';', tracking line numbers and stripping comments
std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    std::string cur;
    int line = 1, start_line = 1;
    bool in_comment = false;
    for (char c : text) {
        if (c == '\n') {
            ++line;
            in_comment = false;
            cur += ' ';
            continue;
        }
        if (in_comment) continue;
        if (c == '#') {
            in_comment = true;
            continue;
        }
        if (c == ';') {
            out.push_back({cur, start_line});
            cur.clear();
            start_line = line;
            continue;
        }
        if (cur.empty() && std::isspace(static_cast<unsigned char>(c))) {
            start_line = line;
            continue;
        }
        cur += c;
    }
    std::string tail = cur;
    bool blank = true;
    for (char c : tail)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back({cur, start_line});
    return out;
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
    ProblemFile pf;
    std::vector<Diagnostic> diags;

    auto note = [&](int line, const std::string& msg) {
        diags.push_back(Diagnostic{line, 1, msg});
    };

    for (const auto& [stmt, line] : split_statements(text)) {
        std::istringstream iss(stmt);
        std::string keyword;
        iss >> keyword;
        if (keyword.empty()) continue;

        try {
            if (keyword == "ring") {
                std::string rest = trim(stmt.substr(stmt.find("ring") + 4));
                size_t lb = rest.find('[');
                size_t rb = rest.rfind(']');
                if (lb == std::string::npos || rb == std::string::npos || rb < lb) {
                    note(line, "ring declaration needs the form QQ[x1, x2] or CC[x1, x2]");
                    continue;
                }
                std::string field = trim(rest.substr(0, lb));
                if (field != "QQ" && field != "CC") {
                    note(line, "coefficient field must be QQ or CC");
                    continue;
                }
                std::vector<std::string> names;
                for (auto& n : split_commas(rest.substr(lb + 1, rb - lb - 1))) {
                    if (!valid_name(n)) {
                        note(line, "bad variable name '" + n + "'");
                        names.clear();
                        break;
                    }
                    names.push_back(n);
                }
                if (names.empty()) continue;
                pf.complex_field = field == "CC";
                pf.ring = Ring::make(names, pf.complex_field ? CoeffField::ComplexDouble
                                                             : CoeffField::Rational);
                continue;
            }

            size_t eq = stmt.find('=');
            if (eq == std::string::npos) {
                note(line, "expected '=' in '" + keyword + "' statement");
                continue;
            }
            std::istringstream head(stmt.substr(0, eq));
            std::string kw, name;
            head >> kw >> name;
            std::string rhs = trim(stmt.substr(eq + 1));

            if (kw == "option") {
                if (!valid_name(name)) {
                    note(line, "bad option name");
                    continue;
                }
                pf.options[name] = rhs;
                continue;
            }
            if (!pf.ring) {
                note(line, "a ring must be declared before '" + kw + "'");
                continue;
            }
            if (!valid_name(name)) {
                note(line, "bad name in '" + kw + "' statement");
                continue;
            }

            if (kw == "ideal" || kw == "prime") {
                if (rhs.empty()) {
                    note(line, "ideal requires at least one generator");
                    continue;
                }
                ProblemFile::NamedIdeal ni;
                ni.declared_prime = kw == "prime";
                for (const auto& part : split_commas(rhs)) {
                    if (part.empty()) {
                        note(line, "ideal requires at least one generator");
                        ni.generators.clear();
                        break;
                    }
                    ni.generators.push_back(parse_polynomial(part, pf.ring));
                }
                if (ni.generators.empty()) continue;
                if (!pf.ideals.count(name)) pf.ideal_order.push_back(name);
                pf.ideals[name] = std::move(ni);
            } else if (kw == "operators") {
                if (rhs.empty()) {
                    note(line, "operator list requires at least one entry");
                    continue;
                }
                std::vector<DiffOp> ops;
                for (const auto& part : split_commas(rhs))
                    ops.push_back(parse_diffop(part, pf.ring));
                pf.operators[name] = std::move(ops);
            } else if (kw == "point") {
                if (!pf.points.count(name)) pf.point_order.push_back(name);
                pf.points[name] = parse_point(rhs, pf.ring->arity());
            } else {
                note(line, "unknown statement '" + kw + "'");
            }
        } catch (const ParseError& pe) {
            for (auto d : pe.diagnostics()) {
                d.line += line - 1;
                diags.push_back(d);
            }
        } catch (const Error& e) {
            note(line, e.what());
        }
    }

    if (!diags.empty()) throw ParseError(std::move(diags));
    if (!pf.ring) throw ParseError({Diagnostic{1, 1, "missing ring declaration"}});
    return pf;
}

} // namespace noethops
