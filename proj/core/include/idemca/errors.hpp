#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "idemca/word.hpp"

namespace idemca {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input word shorter than one full neighborhood window.
struct WordTooShort : Error {
    WordTooShort(std::size_t got, std::size_t need);
};

struct AlphabetMismatch : Error {
    AlphabetMismatch();
};

/// An exhaustive table operation would exceed the configured window budget.
struct ExhaustiveCheckInfeasible : Error {
    std::uint64_t windows_required;
    explicit ExhaustiveCheckInfeasible(std::uint64_t required);
};

/// A non-identity bijection has no idempotent factorization.
struct NotDecomposable : Error {
    NotDecomposable();
};

/// The finite analog of the periodic-orbit condition fails at period n:
/// f maps the least-period-n points onto themselves but not identically.
struct ConditionViolated : Error {
    int period;
    Word witness_period_word;
    ConditionViolated(int n, Word witness);
};

struct SourceIsSurjective : Error {
    SourceIsSurjective();
};

struct SearchBudgetExceeded : Error {
    explicit SearchBudgetExceeded(const std::string& what);
};

struct NoThresholdFound : Error {
    explicit NoThresholdFound(const std::string& what);
};

struct LengthBelowThreshold : Error {
    LengthBelowThreshold(std::size_t got, std::size_t need);
};

struct MalformedBlock : Error {
    explicit MalformedBlock(const std::string& what);
};

/// Rule-file syntax error with a 1-based location.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line, int column, const std::string& what);
};

/// Default cap on exhaustive window enumeration (2^24).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

}  // namespace idemca
