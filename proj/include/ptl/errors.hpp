#pragma once

#include <stdexcept>
#include <string>

namespace ptl {

enum class errc {
  non_prime,
  too_large,
  division_by_zero,
  zero_vector,
  degree_mismatch,
  singular,
  point_on_axis,
  infeasible_send,
  not_bijective,
  not_i_disjoint,
  not_disjoint,
  not_transitive_enough,
  infeasible,
  infeasible_degree,
  budget_exceeded,
  seed_dependent,
  bad_query,
  parse_error,
};

/// All contract violations surface as this exception; `code` identifies the
/// failed precondition so callers and tests can branch on it.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace ptl
