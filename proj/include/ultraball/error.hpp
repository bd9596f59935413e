#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ub {

// Library-wide error. `code` is a short machine-readable identifier
// ("not-ultrametric", "empty-subset", ...); `witness` is an optional JSON
// fragment pinpointing the offending data.
class Error : public std::runtime_error {
 public:
  enum class Kind { domain, parse };

  Error(std::string code, const std::string& message, Kind kind = Kind::domain,
        std::string witness_json = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        kind_(kind),
        witness_(std::move(witness_json)) {}

  const std::string& code() const { return code_; }
  Kind kind() const { return kind_; }
  // Empty when there is no witness; otherwise a serialized JSON value.
  const std::string& witness() const { return witness_; }

 private:
  std::string code_;
  Kind kind_;
  std::string witness_;
};

inline Error parse_error(std::string code, const std::string& message) {
  return Error(std::move(code), message, Error::Kind::parse);
}

}  // namespace ub
