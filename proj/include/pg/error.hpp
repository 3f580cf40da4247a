#pragma once

#include <stdexcept>
#include <string>

namespace pg {

enum class ErrorKind {
    NotApart,
    Degenerate,
    CenterOnLine,
    OffDomain,
    ChainMismatch,
    SameLine,
    Perspective,
    NoMovedPoint,
    NotOnConic,
    TangentLine,
    DegenerateFive,
    TangentsConcurrent,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotApart: return "NotApart";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::CenterOnLine: return "CenterOnLine";
        case ErrorKind::OffDomain: return "OffDomain";
        case ErrorKind::ChainMismatch: return "ChainMismatch";
        case ErrorKind::SameLine: return "SameLine";
        case ErrorKind::Perspective: return "Perspective";
        case ErrorKind::NoMovedPoint: return "NoMovedPoint";
        case ErrorKind::NotOnConic: return "NotOnConic";
        case ErrorKind::TangentLine: return "TangentLine";
        case ErrorKind::DegenerateFive: return "DegenerateFive";
        case ErrorKind::TangentsConcurrent: return "TangentsConcurrent";
    }
    return "Unknown";
}

// Thrown by kernel operations whose preconditions cannot be met exactly.
// Decisions over the rationals are exact, so every throw is a definite
// geometric fact, never a numerical tolerance call.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pg
