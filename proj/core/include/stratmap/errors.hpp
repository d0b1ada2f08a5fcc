#ifndef STRATMAP_ERRORS_HPP
#define STRATMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stratmap {

/// Raised when an input file violates its format. `line` is 1-based;
/// 0 means the error is not tied to a particular line.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when an operation is called outside its stated preconditions
/// (empty graph, isolated node fed to normalization, oversized brute force, ...).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace stratmap

#endif
