#pragma once

#include <stdexcept>
#include <string>

namespace lfm {

enum class Errc {
  file_not_found,
  parse_error,
  duplicate_id,
  missing_id_column,
  dangling_id,
  invalid_argument,
  validation_failed,
  unknown_lf,
  unknown_pair,
  no_usable_lfs,
  model_not_fit,
  no_predicted_matches,
  missing_ids,
  dimension_mismatch,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace lfm
