#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdlat {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A semidirect action that is not an automorphism of the required order.
class InvalidAction : public Error {
 public:
  using Error::Error;
};

/// Requested group order exceeds the configured size guard.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// Subgroup enumeration passed the configured subgroup-count cap.
class Explosion : public Error {
 public:
  Explosion(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

}  // namespace cdlat
