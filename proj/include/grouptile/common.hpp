#pragma once
// Shared element type and error taxonomy for the grouptile library.

#include <stdexcept>
#include <string>

namespace grouptile {

inline constexpr const char* kVersion = "0.1.0";

// Element of a finite group, as an index into its multiplication table.
// The identity is always index 0 after construction.
using Elem = int;

enum class Errc {
  OrderOutOfRange,
  NotPrime,
  NotAGroup,
  SpecParseError,
  NotASubgroup,
  NotLagrange,
  SizeMismatch,
  OddOrder,
  NotElementaryAbelian2,
  NotElementaryAbelian3,
  WrongSize,
  BadParams,
  NotAFactorOfH,
  CatalogBoundExceeded,
  BadSubsetText,
  BadElementName,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::OrderOutOfRange: return "OrderOutOfRange";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::SpecParseError: return "SpecParseError";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotLagrange: return "NotLagrange";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::OddOrder: return "OddOrder";
    case Errc::NotElementaryAbelian2: return "NotElementaryAbelian2";
    case Errc::NotElementaryAbelian3: return "NotElementaryAbelian3";
    case Errc::WrongSize: return "WrongSize";
    case Errc::BadParams: return "BadParams";
    case Errc::NotAFactorOfH: return "NotAFactorOfH";
    case Errc::CatalogBoundExceeded: return "CatalogBoundExceeded";
    case Errc::BadSubsetText: return "BadSubsetText";
    case Errc::BadElementName: return "BadElementName";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace grouptile
