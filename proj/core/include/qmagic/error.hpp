#pragma once

#include <stdexcept>
#include <string>

namespace qmagic {

enum class Errc {
  non_invertible,
  dimension_mismatch,
  budget_exceeded,
  unsupported_dimension,
  invalid_stabilizer,
  not_clifford,
  not_symplectic,
  unknown_name,
  infeasible,
  invalid_input,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qmagic
