#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace layoutalg {

/// Machine-readable category of a failure.  Every operation in the library
/// reports domain failures by throwing `Error` tagged with one of these.
enum class ErrorKind {
    Overflow,           ///< 64-bit arithmetic would overflow
    OutOfRange,         ///< index / coordinate / input outside its domain
    LengthMismatch,     ///< sizes of paired containers disagree
    NotARefinement,     ///< a tuple does not refine the tuple it was paired with
    NotComplementable,  ///< layout has no (N-)complement
    NotTractable,       ///< layout is not tractable
    NotComposable,      ///< composition undefined (no mutual refinement, cosize bound)
    NotInjective,       ///< morphism is not injective, so has no complement
    ImagesNotDisjoint,  ///< concatenation of morphisms with overlapping images
    DomainMismatch,     ///< codomain of one morphism is not the domain of the next
    InvalidArgument,    ///< malformed value (e.g. shape entry 0, bad map)
    NotAPermutation,    ///< permutation argument is not a bijection of 1..m
    ParseError,         ///< text could not be parsed
    CapExceeded,        ///< oracle size cap exceeded
    ImageOutOfRange,    ///< oracle: image of A escapes the domain of B
    Unrenderable,       ///< layout cannot be drawn as a 2-D grid
};

/// Stable kebab-case name for an error kind, used by the CLI's one-line reasons.
std::string_view to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace layoutalg
