#include "layoutalg/error.hpp"

namespace layoutalg {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Overflow: return "overflow";
        case ErrorKind::OutOfRange: return "out-of-range";
        case ErrorKind::LengthMismatch: return "length-mismatch";
        case ErrorKind::NotARefinement: return "not-a-refinement";
        case ErrorKind::NotComplementable: return "not-complementable";
        case ErrorKind::NotTractable: return "not-tractable";
        case ErrorKind::NotComposable: return "not-composable";
        case ErrorKind::NotInjective: return "not-injective";
        case ErrorKind::ImagesNotDisjoint: return "images-not-disjoint";
        case ErrorKind::DomainMismatch: return "domain-mismatch";
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::NotAPermutation: return "not-a-permutation";
        case ErrorKind::ParseError: return "parse-error";
        case ErrorKind::CapExceeded: return "cap-exceeded";
        case ErrorKind::ImageOutOfRange: return "image-out-of-range";
        case ErrorKind::Unrenderable: return "unrenderable";
    }
    return "unknown";
}

}  // namespace layoutalg
