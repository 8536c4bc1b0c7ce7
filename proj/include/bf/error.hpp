#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bf {

enum class Errc {
  NotAGroup,
  UnsupportedSize,
  NotAHomomorphism,
  GroupMismatch,
  NotInAugmentationIdeal,
  DimensionMismatch,
  NonIntegerCoefficient,
  MubarNonzero,
  InvalidForm,
  DepthTooLarge,
  OrderTooLarge,
  DegreeOutOfRange,
  ModelMismatch,
  SubspaceMismatch,
  NotACycle,
  PrimaryNonzero,
  SecondaryNonzero,
  Delta2Nonzero,
  MissingLift,
  MissingForm,
  MissingSphericalRep,
  NotSCharacteristic,
  Overflow,
  InvalidArgument,
  ParseError,
};

const char* errc_name(Errc c);

// staged-pipeline precondition failures (cli exit code 3)
bool is_stage_error(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg);
  Errc code() const { return code_; }
  const std::string& message() const { return msg_; }  // without the code prefix

 private:
  Errc code_;
  std::string msg_;
};

[[noreturn]] void fail(Errc c, const std::string& msg);

// checked int64 arithmetic; throws Overflow
int64_t add_ck(int64_t a, int64_t b);
int64_t sub_ck(int64_t a, int64_t b);
int64_t mul_ck(int64_t a, int64_t b);

inline int mod2(int64_t a) { return static_cast<int>(a & 1); }

}  // namespace bf
