#pragma once
// Error reporting for the whole library.  Every failure is an sgt::Error
// carrying a code; codes are grouped into three classes that the command
// line tool maps onto process exit codes:
//
//   input     (2)  the caller handed us something malformed or out of domain
//   resource  (3)  a size cap or retry budget was exhausted
//   internal  (4)  a computed result violated one of our own invariants

#include <stdexcept>
#include <string>

namespace sgt {

enum class Errc {
  // input
  RejectLoop,
  RejectDuplicateEdge,
  RejectNonpositiveWeight,
  RejectDisconnected,
  RejectTooSmall,
  InvalidVertex,
  AsymmetricMatrix,
  NonzeroDiagonal,
  NonpositiveOffDiagonal,
  TriangleViolation,
  NonpositiveDelta,
  DuplicateValue,
  NotATree,
  NotAHammingCube,
  NotAPathGraph,
  MissingLevelMetadata,
  EdgeOutsideSupport,
  ConstantMap,
  EmptyOrFullSubset,
  DistortionBelowOne,
  DomainError,
  ParseError,
  InvalidArgument,
  // resource
  SizeCapExceeded,
  SearchSpaceTooLarge,
  PairingFailed,
  // internal
  DegenerateSpectrum,
  InconsistentBounds,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::RejectLoop: return "RejectLoop";
    case Errc::RejectDuplicateEdge: return "RejectDuplicateEdge";
    case Errc::RejectNonpositiveWeight: return "RejectNonpositiveWeight";
    case Errc::RejectDisconnected: return "RejectDisconnected";
    case Errc::RejectTooSmall: return "RejectTooSmall";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::AsymmetricMatrix: return "AsymmetricMatrix";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::NonpositiveOffDiagonal: return "NonpositiveOffDiagonal";
    case Errc::TriangleViolation: return "TriangleViolation";
    case Errc::NonpositiveDelta: return "NonpositiveDelta";
    case Errc::DuplicateValue: return "DuplicateValue";
    case Errc::NotATree: return "NotATree";
    case Errc::NotAHammingCube: return "NotAHammingCube";
    case Errc::NotAPathGraph: return "NotAPathGraph";
    case Errc::MissingLevelMetadata: return "MissingLevelMetadata";
    case Errc::EdgeOutsideSupport: return "EdgeOutsideSupport";
    case Errc::ConstantMap: return "ConstantMap";
    case Errc::EmptyOrFullSubset: return "EmptyOrFullSubset";
    case Errc::DistortionBelowOne: return "DistortionBelowOne";
    case Errc::DomainError: return "DomainError";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::PairingFailed: return "PairingFailed";
    case Errc::DegenerateSpectrum: return "DegenerateSpectrum";
    case Errc::InconsistentBounds: return "InconsistentBounds";
  }
  return "UnknownError";
}

// Exit class for the CLI: 2 input, 3 resource, 4 internal.
inline int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::SizeCapExceeded:
    case Errc::SearchSpaceTooLarge:
    case Errc::PairingFailed:
      return 3;
    case Errc::DegenerateSpectrum:
    case Errc::InconsistentBounds:
      return 4;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  Errc code() const { return code_; }
  int exit_code() const { return errc_exit_code(code_); }
  const std::string& message() const { return message_; }

 private:
  Errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sgt
