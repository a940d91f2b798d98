#pragma once

#include <stdexcept>
#include <string>

namespace quivalg {

// Base of every error the library throws. kind() is the stable name used in
// reports and by the command-line exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QUIVALG_ERROR(Name)                                                   \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& message) : Error(#Name, message) {}  \
    };

QUIVALG_ERROR(DanglingArrow)
QUIVALG_ERROR(DuplicateArrowId)
QUIVALG_ERROR(UnknownVertex)
QUIVALG_ERROR(UnknownArrow)
QUIVALG_ERROR(SchemaViolation)
QUIVALG_ERROR(InvalidRelation)
QUIVALG_ERROR(NotStabilized)
QUIVALG_ERROR(MissingDegreeMap)
QUIVALG_ERROR(HypothesisViolated)
QUIVALG_ERROR(NonHomogeneousRelation)
QUIVALG_ERROR(NotReduced)
QUIVALG_ERROR(UnusedVertex)
QUIVALG_ERROR(GroupTooLarge)
QUIVALG_ERROR(OrientedCycle)
QUIVALG_ERROR(NotLocal)
QUIVALG_ERROR(IsomorphicSummands)
QUIVALG_ERROR(NotAComplex)
QUIVALG_ERROR(InvalidModule)
QUIVALG_ERROR(InvalidGraph)

#undef QUIVALG_ERROR

}  // namespace quivalg
