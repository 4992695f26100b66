#pragma once

#include <stdexcept>
#include <string>

namespace frobvol {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define FROBVOL_ERROR(Name)                                  \
    class Name : public Error {                              \
    public:                                                  \
        explicit Name(const std::string& what)               \
            : Error(std::string(#Name ": ") + what) {}       \
    }

FROBVOL_ERROR(DivisionByZero);
FROBVOL_ERROR(FieldMismatch);
FROBVOL_ERROR(NotAPthPower);
FROBVOL_ERROR(RingMismatch);
FROBVOL_ERROR(IncompletePlan);
FROBVOL_ERROR(ParseError);
FROBVOL_ERROR(InvalidMatrix);
FROBVOL_ERROR(InvalidInput);
FROBVOL_ERROR(TemplateMismatch);
FROBVOL_ERROR(NotArtinianWithinBound);
FROBVOL_ERROR(DegenerateNormalization);
FROBVOL_ERROR(InsufficientTranscendentals);
FROBVOL_ERROR(UnknownCore);
FROBVOL_ERROR(IdentityFails);
FROBVOL_ERROR(DegenerateInstance);

#undef FROBVOL_ERROR

}  // namespace frobvol
