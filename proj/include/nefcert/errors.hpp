#pragma once

#include <stdexcept>
#include <string>

namespace nefcert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPartition : Error {
  using Error::Error;
};
struct DomainTooSmall : Error {
  using Error::Error;
};
struct AmbientMismatch : Error {
  using Error::Error;
};
struct InvalidRelation : Error {
  using Error::Error;
};
struct NormalFormUnavailable : Error {
  using Error::Error;
};
struct FlowMismatch : Error {
  int vertex;
  FlowMismatch(int v, const std::string& msg) : Error(msg), vertex(v) {}
};
struct DegreesNotReduced : Error {
  using Error::Error;
};
struct ModulusMismatch : Error {
  using Error::Error;
};
struct ModulusTooSmall : Error {
  using Error::Error;
};
struct NotATree : Error {
  using Error::Error;
};
struct UnbalanceNotFound : Error {
  using Error::Error;
};
struct CertificateSearchFailed : Error {
  using Error::Error;
};
struct UnsupportedOptionCombo : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace nefcert
