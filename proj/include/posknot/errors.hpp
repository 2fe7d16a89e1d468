#pragma once

#include <stdexcept>
#include <string>

namespace posknot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
  using Error::Error;
};
struct InvalidInput : Error {
  using Error::Error;
};
struct NotPositiveKnot : Error {
  using Error::Error;
};
struct NonIntegerResult : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct CheckpointCorrupt : Error {
  using Error::Error;
};

}  // namespace posknot
