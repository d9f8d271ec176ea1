#include "drg/error.hpp"

namespace drg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotElement: return "NotElement";
    case ErrorKind::NotMaterialized: return "NotMaterialized";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotGeneratingCoset: return "NotGeneratingCoset";
    case ErrorKind::NotHall: return "NotHall";
    case ErrorKind::NoComplementFound: return "NoComplementFound";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::UnknownCorpus: return "UnknownCorpus";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace drg
