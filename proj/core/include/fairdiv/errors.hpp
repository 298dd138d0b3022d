#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

enum class Errc {
  duplicate_good_in_ranking,
  ranking_length_mismatch,
  good_id_out_of_range,
  invalid_instance,
  invalid_profile,
  invalid_allocation,
  k_too_large,
  zero_n,
  dimension_mismatch,
  cap_exceeded,
  empty_market,
  pick_without_ranked_good,
  k_below_threshold,
  k_below_n,
  k_zero,
  m_not_greater_than_n,
  infeasible_deadlines,
  alpha_out_of_range,
  top_k_sets_disagree,
  n_too_small,
  unknown_rule,
  bad_argument,
  parse_error,
};

const char* errc_name(Errc c);

/// Library error. `detail` carries the offending agent id, good id, or
/// deadline where one exists, else -1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, long long detail = -1)
      : std::runtime_error(msg), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  long long detail() const noexcept { return detail_; }

 private:
  Errc code_;
  long long detail_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg, long long detail = -1) {
  throw Error(code, msg, detail);
}

}  // namespace fairdiv
