#pragma once

#include <stdexcept>
#include <string>

namespace mubclass {

// A generator failed to map the basis family onto itself (up to global
// phase).  Carries the offending generator's label.
class closure_violation : public std::runtime_error {
 public:
  closure_violation(std::string label, const std::string& what)
      : std::runtime_error(what), label_(std::move(label)) {}
  const std::string& generator_label() const noexcept { return label_; }

 private:
  std::string label_;
};

// A request exceeded an explicit resource guard (enumeration cap, group
// order cap, ...).  Deliberate refusal, not a bug.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mubclass
