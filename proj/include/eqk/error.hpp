#pragma once

#include <stdexcept>
#include <string>

namespace eqk {

// All kernel failures carry a stable machine-readable kind ("DivisionByZero",
// "NotAGroup", ...) next to the human message. The CLI maps Error to exit
// code 1 (bad input) or 2 (mathematical violation) based on the kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, const std::string& kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace eqk
