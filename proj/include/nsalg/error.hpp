#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsalg {

enum class ErrorCode {
    EmptyGenerators,
    NonPositive,
    NotMember,
    GluingInvalid,
    NotSubalgebra,
    PreconditionFailed,
    NotFlat,
    InternalInconsistency,
    BoundTooSmall,
    TooLarge,
    ParseError,
    Overflow,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyGenerators: return "EmptyGenerators";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::NotMember: return "NotMember";
        case ErrorCode::GluingInvalid: return "GluingInvalid";
        case ErrorCode::NotSubalgebra: return "NotSubalgebra";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotFlat: return "NotFlat";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::BoundTooSmall: return "BoundTooSmall";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI output can be grepped.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace nsalg
