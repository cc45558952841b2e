#pragma once

#include <stdexcept>
#include <string>

namespace weylindex {

enum class Errc {
  invalid_cartan_type,
  length_mismatch,
  malformed_rational,
  singular_lattice,
  not_full_dimensional,
  degenerate_simplex,
  not_homogeneous,
  wrong_argument_count,
  not_weyl_invariant,
  not_regular,
  orthogonal_point_not_found,
  tiling_mismatch,
  weight_outside_lattice,
  index_out_of_range,
  config_invalid,
  cross_check_failed,
};

const char* errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can classify it without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace weylindex
