#include "bf/error.hpp"

namespace bf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotInAugmentationIdeal: return "NotInAugmentationIdeal";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case Errc::MubarNonzero: return "MubarNonzero";
    case Errc::InvalidForm: return "InvalidForm";
    case Errc::DepthTooLarge: return "DepthTooLarge";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::ModelMismatch: return "ModelMismatch";
    case Errc::SubspaceMismatch: return "SubspaceMismatch";
    case Errc::NotACycle: return "NotACycle";
    case Errc::PrimaryNonzero: return "PrimaryNonzero";
    case Errc::SecondaryNonzero: return "SecondaryNonzero";
    case Errc::Delta2Nonzero: return "Delta2Nonzero";
    case Errc::MissingLift: return "MissingLift";
    case Errc::MissingForm: return "MissingForm";
    case Errc::MissingSphericalRep: return "MissingSphericalRep";
    case Errc::NotSCharacteristic: return "NotSCharacteristic";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_stage_error(Errc c) {
  return c == Errc::PrimaryNonzero || c == Errc::SecondaryNonzero || c == Errc::Delta2Nonzero;
}

Error::Error(Errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c), msg_(msg) {}

void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

int64_t add_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "integer overflow in addition");
  return r;
}

int64_t sub_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::Overflow, "integer overflow in subtraction");
  return r;
}

int64_t mul_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace bf
