#ifndef CDGAW_ERRORS_HPP
#define CDGAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cdgaw {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define CDGAW_ERROR(Name)                                                     \
    struct Name : Error {                                                     \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {}    \
    }

CDGAW_ERROR(DivisionByZero);
CDGAW_ERROR(MixedAlgebras);
CDGAW_ERROR(MixedFields);
CDGAW_ERROR(JacobiFailure);
CDGAW_ERROR(NotInvertible);
CDGAW_ERROR(NotChainMap);
CDGAW_ERROR(DegreeMismatch);
CDGAW_ERROR(DimensionMismatch);
CDGAW_ERROR(ActionIncompatible);
CDGAW_ERROR(NotExact);
CDGAW_ERROR(NotDefined);
CDGAW_ERROR(InvalidDefiningSystem);
CDGAW_ERROR(OddDegreeA);
CDGAW_ERROR(TopNotOneDimensional);
CDGAW_ERROR(DegeneratePairing);
CDGAW_ERROR(NotRingMap);
CDGAW_ERROR(InconsistentData);
CDGAW_ERROR(DegenerateF);
CDGAW_ERROR(UnknownGenerator);
CDGAW_ERROR(ValidationError);

#undef CDGAW_ERROR

/* Parse errors carry a position so the CLI can point at the offending text. */
struct ParseError : Error {
    int line = 0, column = 0;
    ParseError(const std::string& msg, int ln = 0, int col = 0)
        : Error("ParseError: " + msg +
                (ln ? " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")" : "")),
          line(ln), column(col) {}
};

}  // namespace cdgaw

#endif
