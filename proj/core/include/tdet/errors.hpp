#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tdet {

/// Solver produced a non-finite intermediate. Carries the iteration index.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::string what, int iteration)
        : std::runtime_error(std::move(what)), iteration_(iteration) {}
    int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

/// A pixel requested during aggregation is covered by no patch.
class CoverageError : public std::runtime_error {
public:
    CoverageError(std::int64_t x, std::int64_t y, std::int64_t z)
        : std::runtime_error("uncovered pixel at (" + std::to_string(x) + ", " +
                             std::to_string(y) + ", " + std::to_string(z) + ")"),
          x_(x), y_(y), z_(z) {}
    std::int64_t x() const noexcept { return x_; }
    std::int64_t y() const noexcept { return y_; }
    std::int64_t z() const noexcept { return z_; }

private:
    std::int64_t x_, y_, z_;
};

/// Config file rejected. Carries the 1-based line/column of the offending token.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string what, int line = 0, int column = 0)
        : std::runtime_error(std::move(what)), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_, column_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tdet
