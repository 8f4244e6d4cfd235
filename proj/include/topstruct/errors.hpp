#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topstruct {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TOPSTRUCT_ERROR(Name)                       \
    class Name : public Error {                     \
    public:                                         \
        explicit Name(const std::string& what)      \
            : Error(std::string(#Name ": ") + what) \
        {                                           \
        }                                           \
    }

TOPSTRUCT_ERROR(BudgetExceeded);
TOPSTRUCT_ERROR(AdjacentPair);
TOPSTRUCT_ERROR(NotAnEdge);
TOPSTRUCT_ERROR(NotASubtree);
TOPSTRUCT_ERROR(InconsistentOrientation);
TOPSTRUCT_ERROR(NotAViolation);
TOPSTRUCT_ERROR(SeparationDoesNotDecide);
TOPSTRUCT_ERROR(PreconditionFailed);
TOPSTRUCT_ERROR(OrientationMismatch);
TOPSTRUCT_ERROR(Indistinguishable);
TOPSTRUCT_ERROR(CoverageImpossible);
TOPSTRUCT_ERROR(BichromaticComponent);
TOPSTRUCT_ERROR(UncoloredComponent);
TOPSTRUCT_ERROR(InternalInvariant);

#undef TOPSTRUCT_ERROR

/// Parse failure with the 1-based line it happened on.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// Deterministic work counter shared by the exhaustive searches.
///
/// Each expansion of a search node costs one unit. Running out raises
/// BudgetExceeded instead of returning a possibly wrong negative answer.
class Budget {
public:
    static constexpr std::uint64_t kDefault = 10'000'000;

    explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}

    void spend(std::uint64_t units = 1, const char* where = "search")
    {
        used_ += units;
        if (used_ > limit_)
            throw BudgetExceeded(std::string(where) + " exceeded " + std::to_string(limit_) + " expansions");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace topstruct
