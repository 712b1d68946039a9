#pragma once

#include <stdexcept>
#include <string>

namespace driftkit {

// Base class for every error the framework raises on bad inputs or bad state.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class LengthMismatchError : public Error {
public:
    using Error::Error;
};

// A rate denominator vanished: the evaluated set is missing one class.
class UndefinedRateError : public Error {
public:
    using Error::Error;
};

class UnorderedStreamError : public Error {
public:
    using Error::Error;
};

class InvalidThresholdError : public Error {
public:
    using Error::Error;
};

class OutOfRangeError : public Error {
public:
    using Error::Error;
};

class InvalidDistributionError : public Error {
public:
    using Error::Error;
};

class EmptyStreamError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class TooFewClustersError : public Error {
public:
    using Error::Error;
};

class SingleClassDataError : public Error {
public:
    using Error::Error;
};

class UnknownLabelError : public Error {
public:
    using Error::Error;
};

// Parse failure in an input file; carries a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class InvalidSpecError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace driftkit
