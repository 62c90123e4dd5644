#pragma once

#include <stdexcept>
#include <string>

namespace pbwlab {

enum class Errc {
    invalid_argument,  // bad rank, weight, entry or dimension
    incompatible,      // operands over different rank parameters
    not_realizable,    // rank tuple with no representation
    resource_limit,    // instance exceeds the built-in work bound
    invalid_field,     // field size not a supported prime
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace pbwlab
