#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace workbench {

enum class ErrorCode {
  empty_alphabet,
  duplicate_symbol,
  symbol_not_in_alphabet,
  alphabet_mismatch,
  malformed_machine,
  machine_file_syntax,
  input_symbol_not_in_alphabet,
  stream_exhausted,
  non_increasing_stream,
  inverse_failure,
  source_exhausted,
  incomparable_endpoints,
  index_out_of_table,
  non_boolean_value,
  totality_breach,
  rank_out_of_library,
  decider_contract_breach,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_alphabet: return "empty-alphabet";
    case ErrorCode::duplicate_symbol: return "duplicate-symbol";
    case ErrorCode::symbol_not_in_alphabet: return "symbol-not-in-alphabet";
    case ErrorCode::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorCode::malformed_machine: return "malformed-machine";
    case ErrorCode::machine_file_syntax: return "machine-file-syntax";
    case ErrorCode::input_symbol_not_in_alphabet: return "input-symbol-not-in-alphabet";
    case ErrorCode::stream_exhausted: return "stream-exhausted";
    case ErrorCode::non_increasing_stream: return "non-increasing-stream";
    case ErrorCode::inverse_failure: return "inverse-failure";
    case ErrorCode::source_exhausted: return "source-exhausted";
    case ErrorCode::incomparable_endpoints: return "incomparable-endpoints";
    case ErrorCode::index_out_of_table: return "index-out-of-table";
    case ErrorCode::non_boolean_value: return "non-boolean-value";
    case ErrorCode::totality_breach: return "totality-breach";
    case ErrorCode::rank_out_of_library: return "rank-out-of-library";
    case ErrorCode::decider_contract_breach: return "decider-contract-breach";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message starts with the code's name so CLI diagnostics stay greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace workbench
