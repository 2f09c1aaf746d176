#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace preord {

// Machine-readable failure reasons; the CLI maps these onto its error envelope.
enum class Errc {
  malformed_input,
  dimension_mismatch,
  group_mismatch,
  field_mismatch,
  not_unimodular,
  equal_inputs,
  standard_input,
  precondition_failed,
  zero_input,
  cap_exceeded,
  unsupported,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::malformed_input: return "malformed_input";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::group_mismatch: return "group_mismatch";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::not_unimodular: return "not_unimodular";
    case Errc::equal_inputs: return "equal_inputs";
    case Errc::standard_input: return "standard_input";
    case Errc::precondition_failed: return "precondition_failed";
    case Errc::zero_input: return "zero_input";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::unsupported: return "unsupported";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace preord
