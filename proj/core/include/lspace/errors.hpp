#pragma once

#include <stdexcept>
#include <string>

namespace lspace {

/// Malformed textual input (graph files, CLI argument lists).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(msg)
                                      : std::move(msg)),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Violated operation precondition (graph outside the supported class,
/// invalid surgery parameters, and so on).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

} // namespace lspace
