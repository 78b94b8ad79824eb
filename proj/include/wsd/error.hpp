#pragma once

#include <stdexcept>
#include <string>

namespace wsd {

enum class Err {
  duplicate_id,
  cycle_detected,
  dangling_parent,
  unknown_synset,
  parse_error,
  wrong_part_of_speech,
  unknown_lemma,
  empty_corpus,
  no_senses,
  empty_group,
  requires_ancestor_extension,
  all_cases_excluded,
  target_not_in_group,
  invalid_gold,
  log_base_mismatch,
  io_error,
};

// Single exception type; the code keeps failures programmatically testable
// while what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace wsd
