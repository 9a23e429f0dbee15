#pragma once

#include <stdexcept>
#include <string>

namespace noethops {

// Domain errors carry a category so the CLI can map them to exit codes.
class Error : public std::runtime_error {
public:
    enum class Code {
        RingMismatch,
        ArityMismatch,
        NotExact,
        DivisionByZero,
        NotOnVariety,
        NoStabilization,
        NotPrimary,
        BadInput,
        CapExceeded,
    };

    Error(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

[[noreturn]] inline void fail(Error::Code code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace noethops
