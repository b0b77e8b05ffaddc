#pragma once

#include <stdexcept>
#include <string>

namespace clonelab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidElection : Error {
  using Error::Error;
};
struct UnknownCandidate : Error {
  using Error::Error;
};
struct SameCandidate : Error {
  using Error::Error;
};
struct NotScoreBased : Error {
  using Error::Error;
};
struct InvalidSize : Error {
  using Error::Error;
};
struct MalformedAssignment : Error {
  using Error::Error;
};
struct SearchSpaceTooLarge : Error {
  using Error::Error;
};
struct InvalidThreshold : Error {
  using Error::Error;
};
struct UnrealizableParity : Error {
  using Error::Error;
};
struct Unsupported : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

}  // namespace clonelab
