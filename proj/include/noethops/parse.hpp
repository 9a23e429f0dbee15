#pragma once

#include <string>
#include <vector>

#include "noethops/diffop.hpp"

namespace noethops {

struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string message;

    std::string to_string() const {
        return std::to_string(line) + ":" + std::to_string(col) + ": " + message;
    }
};

// Syntax errors carry located diagnostics; the CLI maps them to exit code 1.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<Diagnostic> diags)
        : std::runtime_error(diags.empty() ? "parse error" : diags.front().to_string()),
          diagnostics_(std::move(diags)) {}
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

// Shared expression grammar: `^` for powers, `*` optional, `/` by constants,
// variables as declared identifiers, `d<var>` differential symbols.
QPoly parse_polynomial(const std::string& text, const RingPtr& ring);
DiffOp parse_diffop(const std::string& text, const RingPtr& ring);

// "1.5", "-2e-3", "1+2i", "3i", "1.5-0.5i"
Complex parse_complex(const std::string& text);

std::vector<Complex> parse_point(const std::string& text, size_t arity);

} // namespace noethops
