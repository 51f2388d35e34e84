#pragma once

#include <stdexcept>
#include <string>

namespace galois {

enum class Errc {
  empty_poset,
  cycle_detected,
  duplicate_label,
  unknown_label,
  index_out_of_range,
  dimension_mismatch,
  not_monotone,
  not_a_connection,
  source_target_mismatch,
  not_commutative,
  not_associative,
  not_join_preserving,
  not_bounded,
  invalid_modulus,
  size_bound_exceeded,
  parse_error,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::empty_poset: return "EmptyPoset";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::not_a_connection: return "NotAConnection";
    case Errc::source_target_mismatch: return "SourceTargetMismatch";
    case Errc::not_commutative: return "NotCommutative";
    case Errc::not_associative: return "NotAssociative";
    case Errc::not_join_preserving: return "NotJoinPreserving";
    case Errc::not_bounded: return "NotBounded";
    case Errc::invalid_modulus: return "InvalidModulus";
    case Errc::size_bound_exceeded: return "SizeBoundExceeded";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace galois
