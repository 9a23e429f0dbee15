#pragma once

#include <map>

#include "noethops/ideal.hpp"
#include "noethops/parse.hpp"

namespace noethops {

// Parsed problem file: one ring declaration, named ideals/primes/operator
// lists/points, and an options block.
struct ProblemFile {
    RingPtr ring;
    bool complex_field = false;

    struct NamedIdeal {
        std::vector<QPoly> generators;
        bool declared_prime = false;
    };
    std::map<std::string, NamedIdeal> ideals;
    std::vector<std::string> ideal_order;

    std::map<std::string, std::vector<DiffOp>> operators;
    std::map<std::string, std::vector<Complex>> points;
    std::vector<std::string> point_order;
    std::map<std::string, std::string> options;

    const NamedIdeal* find_ideal(const std::string& name) const {
        auto it = ideals.find(name);
        return it == ideals.end() ? nullptr : &it->second;
    }
};

// Grammar:
//   ring QQ[x1, x2, x3];
//   ideal Q = x1^2, x2^2, x1 - x2*x3;
//   prime P = x1, x2;
//   operators L = 1, x3*dx1 + dx2;
//   point p = 0, 0, 5;
//   option strategy = punctual-hilbert;
// '#' starts a comment.  All syntax errors are collected with line/column
// positions and reported together.
ProblemFile parse_problem(const std::string& text);

} // namespace noethops
