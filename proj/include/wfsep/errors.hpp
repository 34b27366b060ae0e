#pragma once

#include <stdexcept>
#include <string>

namespace wfsep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedInput : Error {
  using Error::Error;
};
struct AlphabetMismatch : Error {
  using Error::Error;
};
struct UnknownSymbol : Error {
  using Error::Error;
};
struct EpsilonAccepted : Error {
  using Error::Error;
};
struct NotWellFormed : Error {
  using Error::Error;
};
struct MissingOrder : Error {
  using Error::Error;
};
struct NotUpwardClosed : Error {
  using Error::Error;
};
struct IsSeparable : Error {
  using Error::Error;
};
struct BoundExceeded : Error {
  using Error::Error;
};
struct InvalidAction : Error {
  using Error::Error;
};
struct NotInD : Error {
  using Error::Error;
};
struct NotAntichain : Error {
  using Error::Error;
};

}  // namespace wfsep
