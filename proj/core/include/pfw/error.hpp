#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfw {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction would exceed one of the configured size caps.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string const& what_cap, std::size_t limit, std::size_t needed);

  std::string const& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::size_t limit_;
};

// Malformed input: not a partial order, not a lattice, not distributive, ...
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Size limits. Element counts grow exponentially in the number of
// join-irreducibles, so every enumerating construction checks these.
struct Caps {
  std::size_t max_ji = 16;
  std::size_t max_elements = 4096;
  std::size_t max_congruences = 4096;
  std::size_t max_cideals = 4096;
  std::size_t max_universe = 8;
  // Cauchy-map enumeration bound on |L| and |M|.
  std::size_t max_enum_size = 6;

  bool operator==(Caps const&) const = default;
};

// Process-wide caps; reads and writes are synchronized.
Caps caps();
void set_caps(Caps const& c);

// Parses "max_ji=10,max_elements=2048" or a JSON object with the same keys,
// starting from `base`. Throws InvalidInput on unknown keys or bad numbers.
Caps parse_caps(std::string_view text, Caps base = {});

}  // namespace pfw
