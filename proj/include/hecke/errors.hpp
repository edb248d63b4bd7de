#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Error taxonomy shared by all modules. Codes are stable: the CLI maps
// them onto its exit-code contract (2 = bad input, 1 = verification failure).
enum class Errc {
    DivisionByZero,
    PoleAtPoint,
    IndexOutOfRange,
    RankMismatch,
    ConfigMismatch,
    ModeMismatch,
    ResourceLimit,
    InvalidParameter,
    NotInvertible,
    SyntaxError,
    InconsistentLabels,
    NotRankTwo,
    UnsupportedShape,
    NotReducible,
    AmbiguousConstituent,
    BadInput,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Parse errors carry the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(Errc::SyntaxError, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::PoleAtPoint: return "PoleAtPoint";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::RankMismatch: return "RankMismatch";
        case Errc::ConfigMismatch: return "ConfigMismatch";
        case Errc::ModeMismatch: return "ModeMismatch";
        case Errc::ResourceLimit: return "ResourceLimit";
        case Errc::InvalidParameter: return "InvalidParameter";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::InconsistentLabels: return "InconsistentLabels";
        case Errc::NotRankTwo: return "NotRankTwo";
        case Errc::UnsupportedShape: return "UnsupportedShape";
        case Errc::NotReducible: return "NotReducible";
        case Errc::AmbiguousConstituent: return "AmbiguousConstituent";
        case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace hecke
