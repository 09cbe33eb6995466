#pragma once

#include <stdexcept>
#include <string>

namespace colhad {

// Base of every error raised by the library. Each subclass corresponds to
// one failure mode of the public operations.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define COLHAD_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

COLHAD_DEFINE_ERROR(SymbolOverlap);
COLHAD_DEFINE_ERROR(InvalidPermutation);
COLHAD_DEFINE_ERROR(InvalidLabel);
COLHAD_DEFINE_ERROR(NotCoherent);
COLHAD_DEFINE_ERROR(OrderMismatch);
COLHAD_DEFINE_ERROR(ZeroSubstitution);
COLHAD_DEFINE_ERROR(ColourOutOfRange);
COLHAD_DEFINE_ERROR(UnknownFamily);
COLHAD_DEFINE_ERROR(BadParameters);
COLHAD_DEFINE_ERROR(DeltaMismatch);
COLHAD_DEFINE_ERROR(TooLarge);
COLHAD_DEFINE_ERROR(UnknownSuite);

#undef COLHAD_DEFINE_ERROR

// Parse failures carry the offending character offset in the input.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace colhad
