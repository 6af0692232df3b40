#pragma once

#include <stdexcept>
#include <string>

namespace hochster {

enum class ErrorCode {
  invalid_vertex,
  invalid_complex,
  not_a_simplex,
  not_subcomplex,
  not_found,
  unknown_name,
  parse_error,
  unsupported_size,
  invalid_connected_sum,
  not_a_sphere,
  not_a_pseudomanifold,
  no_fundamental_class,
  no_top_degree,
  not_poincare_candidate,
  dimension_mismatch,
  not_homogeneous,
  torsion_unsupported,
  no_solution,
  invalid_argument,
  internal_inconsistency,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace hochster
