#include "idemca/errors.hpp"

namespace idemca {

WordTooShort::WordTooShort(std::size_t got, std::size_t need)
    : Error("word of length " + std::to_string(got) + " is shorter than one window (" +
            std::to_string(need) + ")") {}

AlphabetMismatch::AlphabetMismatch() : Error("cellular automata have different alphabets") {}

ExhaustiveCheckInfeasible::ExhaustiveCheckInfeasible(std::uint64_t required)
    : Error("exhaustive check needs " + std::to_string(required) +
            " windows, above the configured budget"),
      windows_required(required) {}

NotDecomposable::NotDecomposable()
    : Error("a non-identity bijection is not a product of idempotents") {}

ConditionViolated::ConditionViolated(int n, Word witness)
    : Error("map sends the period-" + std::to_string(n) +
            " points onto themselves but moves " + format_digits(witness)),
      period(n),
      witness_period_word(std::move(witness)) {}

SourceIsSurjective::SourceIsSurjective()
    : Error("source automaton is surjective; no eraser exists") {}

SearchBudgetExceeded::SearchBudgetExceeded(const std::string& what) : Error(what) {}

NoThresholdFound::NoThresholdFound(const std::string& what) : Error(what) {}

LengthBelowThreshold::LengthBelowThreshold(std::size_t got, std::size_t need)
    : Error("word length " + std::to_string(got) + " is below the capacity threshold " +
            std::to_string(need)) {}

MalformedBlock::MalformedBlock(const std::string& what) : Error(what) {}

ParseError::ParseError(int line_, int column_, const std::string& what)
    : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

}  // namespace idemca
