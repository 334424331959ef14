#include "mq/error.hpp"

namespace mq {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotDG: return "NotDG";
    case ErrorKind::NotRTrivial: return "NotRTrivial";
    case ErrorKind::NotJTrivial: return "NotJTrivial";
    case ErrorKind::NotRectangular: return "NotRectangular";
    case ErrorKind::NotBand: return "NotBand";
    case ErrorKind::NotOrthogroup: return "NotOrthogroup";
    case ErrorKind::NotDA: return "NotDA";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::NotACategory: return "NotACategory";
    case ErrorKind::NotSkeletal: return "NotSkeletal";
    case ErrorKind::NotEI: return "NotEI";
    case ErrorKind::NoSuitablePrime: return "NoSuitablePrime";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::LiftAmbiguous: return "LiftAmbiguous";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::UnsupportedClass: return "UnsupportedClass";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

int error_exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotDG:
    case ErrorKind::NotRTrivial:
    case ErrorKind::NotJTrivial:
    case ErrorKind::NotRectangular:
    case ErrorKind::NotBand:
    case ErrorKind::NotOrthogroup:
    case ErrorKind::NotDA:
    case ErrorKind::UnsupportedClass:
      return 3;
    case ErrorKind::NegativeEntry:
    case ErrorKind::Internal:
      return 4;
    default:
      return 2;
  }
}

}  // namespace mq
