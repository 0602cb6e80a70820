#pragma once

#include <stdexcept>
#include <string>

namespace z2k {

/// Base of every error raised by the library. `kind()` names the violated
/// condition and is what the CLI prints in its diagnostic line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define Z2K_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

Z2K_DEFINE_ERROR(ZeroConstantTerm);
Z2K_DEFINE_ERROR(OutOfTruncation);
Z2K_DEFINE_ERROR(GridViolation);
Z2K_DEFINE_ERROR(PrecisionTooSmall);
Z2K_DEFINE_ERROR(DomainError);
Z2K_DEFINE_ERROR(IndexOutOfRange);
Z2K_DEFINE_ERROR(InvalidLength);
Z2K_DEFINE_ERROR(NoBracket);
Z2K_DEFINE_ERROR(RangeError);
Z2K_DEFINE_ERROR(TooLarge);
Z2K_DEFINE_ERROR(SearchExhausted);
Z2K_DEFINE_ERROR(ParseError);
Z2K_DEFINE_ERROR(InvariantViolation);

#undef Z2K_DEFINE_ERROR

}  // namespace z2k
