#pragma once

#include <stdexcept>
#include <string>

namespace billiards {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error {
  using Error::Error;
};

struct NotInterior : Error {
  using Error::Error;
};

struct NotTriangle : Error {
  using Error::Error;
};

struct NotAcute : Error {
  using Error::Error;
};

struct NotInAcuteRegion : Error {
  using Error::Error;
};

struct BadAngle : Error {
  using Error::Error;
};

struct BadParameter : Error {
  using Error::Error;
};

struct NumericFailure : Error {
  using Error::Error;
};

}  // namespace billiards
