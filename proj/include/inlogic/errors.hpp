#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inlogic {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lex/parse failure; `position` is the 0-based offset into the input text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Unbound variable, unknown symbol, arity or universe mismatch.
class EvalError : public Error {
public:
    using Error::Error;
};

/// Invalid system/file configuration (weights, grids, schemas).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Deneutrosophication over an identically-zero membership.
class NoActivatedOutput : public Error {
public:
    using Error::Error;
};

} // namespace inlogic
