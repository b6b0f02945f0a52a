#pragma once

#include <stdexcept>
#include <string>

namespace sl2p {

enum class errc {
  invalid_input,
  invalid_field,
  resource_limit,
  needs_larger_field,
  not_regular,
  not_integral,
  unsupported,
  internal_error,
};

struct error : std::runtime_error {
  errc kind;
  error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw error(k, msg); }

inline void require(bool ok, errc k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

}  // namespace sl2p
