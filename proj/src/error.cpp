#include "geocrystal/error.hpp"

namespace geocrystal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGCM: return "NotGCM";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::IndexAbsent: return "IndexAbsent";
    case ErrorKind::SingularIntermediate: return "SingularIntermediate";
    case ErrorKind::CartanMismatch: return "CartanMismatch";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::ZeroTorusValue: return "ZeroTorusValue";
    case ErrorKind::OutsideOpenCell: return "OutsideOpenCell";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace geocrystal
