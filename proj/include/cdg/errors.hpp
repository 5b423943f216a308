#pragma once

#include <stdexcept>
#include <string>

namespace cdg {

enum class Errc {
    ColinearInput,
    DegenerateLine,
    AllColinear,
    DuplicatePoints,
    BoundaryEdge,
    ProtectedEdgeIllegal,
    SeedsNotSeparated,
    SeedsOutsideDomain,
    EmptySet,
    DomainNotNested,
    KeepoutUncoverable,
    DomainTooSmall,
    OutOfRange,
    NotMaximal,
    EdgeNotInSet,
    NoMaximalParent,
    BetaTooSmall,
    StabilizationFailed,
    DeltaTooLarge,
    NotGeometric,
    PreconditionViolated,
    InvalidInput,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ColinearInput: return "ColinearInput";
        case Errc::DegenerateLine: return "DegenerateLine";
        case Errc::AllColinear: return "AllColinear";
        case Errc::DuplicatePoints: return "DuplicatePoints";
        case Errc::BoundaryEdge: return "BoundaryEdge";
        case Errc::ProtectedEdgeIllegal: return "ProtectedEdgeIllegal";
        case Errc::SeedsNotSeparated: return "SeedsNotSeparated";
        case Errc::SeedsOutsideDomain: return "SeedsOutsideDomain";
        case Errc::EmptySet: return "EmptySet";
        case Errc::DomainNotNested: return "DomainNotNested";
        case Errc::KeepoutUncoverable: return "KeepoutUncoverable";
        case Errc::DomainTooSmall: return "DomainTooSmall";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::NotMaximal: return "NotMaximal";
        case Errc::EdgeNotInSet: return "EdgeNotInSet";
        case Errc::NoMaximalParent: return "NoMaximalParent";
        case Errc::BetaTooSmall: return "BetaTooSmall";
        case Errc::StabilizationFailed: return "StabilizationFailed";
        case Errc::DeltaTooLarge: return "DeltaTooLarge";
        case Errc::NotGeometric: return "NotGeometric";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::Internal: return "Internal";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace cdg
