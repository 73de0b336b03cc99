#pragma once

#include <stdexcept>
#include <string>

namespace qjet {

// Error hierarchy. Every named failure mode in the engine derives from
// Error so callers (and the CLI) can catch one type and map it to exit
// code 2, while check failures are reported data, not exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QJET_ERROR(Name)                                                      \
    struct Name : Error {                                                     \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    }

QJET_ERROR(DivisionByZero);
QJET_ERROR(PoleAtBinding);
QJET_ERROR(DegreeBoundExceeded);
QJET_ERROR(MixedPresentations);
QJET_ERROR(DegreeMismatch);
QJET_ERROR(SlotOutOfRange);
QJET_ERROR(IndexOutOfRange);
QJET_ERROR(NonSplitCharPoly);
QJET_ERROR(NotInner);
QJET_ERROR(MembershipFailure);
QJET_ERROR(SymmetryViolation);
QJET_ERROR(NotInImage);
QJET_ERROR(BraidingMismatch);
QJET_ERROR(PreconditionViolated);
QJET_ERROR(ParameterDomain);
QJET_ERROR(NonCentralRelations);
QJET_ERROR(ParseError);
QJET_ERROR(InvalidPresentation);
QJET_ERROR(InvalidFixture);

#undef QJET_ERROR

}  // namespace qjet
