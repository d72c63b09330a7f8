#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netrobust {

/// Invalid graph construction, out-of-range node index, bad generator parameter.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list input. Carries the 1-based line number (0 when not line-specific).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what, const std::string &source = {})
        : std::runtime_error((source.empty() ? "" : source + ": ")
                             + (line == 0 ? what : "line " + std::to_string(line) + ": " + what)),
          line_(line), message_(what) {}

    /// The message without location prefixes.
    const std::string &message() const noexcept { return message_; }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
    std::string message_;
};

/// An iterative kernel failed to converge or diverged.
///
/// The best estimate available at the point of failure is retained so callers
/// may decide to accept it.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string &what, double estimate, double residual,
                   std::vector<double> last_iterate = {})
        : std::runtime_error(what), estimate_(estimate), residual_(residual),
          last_iterate_(std::move(last_iterate)) {}

    double estimate() const noexcept { return estimate_; }
    double residual() const noexcept { return residual_; }
    const std::vector<double> &last_iterate() const noexcept { return last_iterate_; }

private:
    double estimate_;
    double residual_;
    std::vector<double> last_iterate_;
};

/// Invalid experiment configuration or a request the harness cannot serve.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A result or input file could not be opened or written. what() names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace netrobust
