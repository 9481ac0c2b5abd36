#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace z2z4 {

struct DivisionByZero : std::invalid_argument {
    explicit DivisionByZero(const std::string& what) : std::invalid_argument(what) {}
};

struct NonUnitLeadingCoefficient : std::invalid_argument {
    explicit NonUnitLeadingCoefficient(const std::string& what) : std::invalid_argument(what) {}
};

struct NotADivisor : std::invalid_argument {
    explicit NotADivisor(const std::string& what) : std::invalid_argument(what) {}
};

struct EvenLength : std::invalid_argument {
    explicit EvenLength(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

struct NotCyclic : std::invalid_argument {
    explicit NotCyclic(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct TooManyRows : std::invalid_argument {
    explicit TooManyRows(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidGenerators : std::invalid_argument {
    explicit InvalidGenerators(const std::string& what) : std::invalid_argument(what) {}
};

struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace z2z4
