#pragma once

#include <stdexcept>
#include <string>

namespace fibra {

// Typed failure codes. Verification stages map these onto report diagnostics;
// the CLI maps anything escaping to exit code 2 (input error).
enum class ErrCode {
  ReduciblePolynomial,
  UnsupportedDegree,
  DivisionByZero,
  ParseError,
  DegreeOverflow,
  ZeroInput,
  ZeroCurve,
  CommonComponent,
  IncompleteList,
  OverCount,
  UnsplitTangentCone,
  ComponentSingularityUnresolved,
  DuplicatePoint,
  LatticeMismatch,
  UnsupportedDepth,
  UnresolvableAtDepth,
  OddBranchClass,
  BranchNotSmooth,
  OddSelfIntersection,
  OddBranchCount,
  NotGenusTwoFiber,
  PencilDimensionMismatch,
  MissingPencil,
  NuTooSmall,
  IncompleteReport,
  RegimeTooSmall,
  UnknownTheorem,
  MissingInput,
  Undecidable,
  InvalidInput,
};

inline const char* err_name(ErrCode c) {
  switch (c) {
    case ErrCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrCode::DivisionByZero: return "DivisionByZero";
    case ErrCode::ParseError: return "ParseError";
    case ErrCode::DegreeOverflow: return "DegreeOverflow";
    case ErrCode::ZeroInput: return "ZeroInput";
    case ErrCode::ZeroCurve: return "ZeroCurve";
    case ErrCode::CommonComponent: return "CommonComponent";
    case ErrCode::IncompleteList: return "IncompleteList";
    case ErrCode::OverCount: return "OverCount";
    case ErrCode::UnsplitTangentCone: return "UnsplitTangentCone";
    case ErrCode::ComponentSingularityUnresolved: return "ComponentSingularityUnresolved";
    case ErrCode::DuplicatePoint: return "DuplicatePoint";
    case ErrCode::LatticeMismatch: return "LatticeMismatch";
    case ErrCode::UnsupportedDepth: return "UnsupportedDepth";
    case ErrCode::UnresolvableAtDepth: return "UnresolvableAtDepth";
    case ErrCode::OddBranchClass: return "OddBranchClass";
    case ErrCode::BranchNotSmooth: return "BranchNotSmooth";
    case ErrCode::OddSelfIntersection: return "OddSelfIntersection";
    case ErrCode::OddBranchCount: return "OddBranchCount";
    case ErrCode::NotGenusTwoFiber: return "NotGenusTwoFiber";
    case ErrCode::PencilDimensionMismatch: return "PencilDimensionMismatch";
    case ErrCode::MissingPencil: return "MissingPencil";
    case ErrCode::NuTooSmall: return "NuTooSmall";
    case ErrCode::IncompleteReport: return "IncompleteReport";
    case ErrCode::RegimeTooSmall: return "RegimeTooSmall";
    case ErrCode::UnknownTheorem: return "UnknownTheorem";
    case ErrCode::MissingInput: return "MissingInput";
    case ErrCode::Undecidable: return "Undecidable";
    case ErrCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrCode code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  ErrCode code() const { return code_; }

 private:
  ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace fibra
