#pragma once

#include <stdexcept>
#include <string>

namespace extlab {

// Base of every error raised by the library. The kind string is stable and
// ends up in CLI diagnostics and reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define EXTLAB_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

EXTLAB_DEFINE_ERROR(NotAGroup);
EXTLAB_DEFINE_ERROR(BudgetExceeded);
EXTLAB_DEFINE_ERROR(ArithmeticOverflow);
EXTLAB_DEFINE_ERROR(InvalidModule);
EXTLAB_DEFINE_ERROR(NotAHomomorphism);
EXTLAB_DEFINE_ERROR(NotACocycle);
EXTLAB_DEFINE_ERROR(NotNormalized);
EXTLAB_DEFINE_ERROR(WindowTooLarge);
EXTLAB_DEFINE_ERROR(ConjugationEscapesN);
EXTLAB_DEFINE_ERROR(NotASection);
EXTLAB_DEFINE_ERROR(NoLift);
EXTLAB_DEFINE_ERROR(DifferentPhi);
EXTLAB_DEFINE_ERROR(UnknownFamily);
EXTLAB_DEFINE_ERROR(NotInner);
EXTLAB_DEFINE_ERROR(SymbolBudgetExceeded);
EXTLAB_DEFINE_ERROR(InvalidCocycle);
EXTLAB_DEFINE_ERROR(ParseError);
EXTLAB_DEFINE_ERROR(InternalError);

#undef EXTLAB_DEFINE_ERROR

} // namespace extlab
