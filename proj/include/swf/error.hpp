#pragma once

#include <stdexcept>
#include <string>

namespace swf {

/// Base for all library errors. name() returns the error kind verbatim
/// ("SingularMatrix", "DomainError", ...) for CLI reporting.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SWF_DEFINE_ERROR(Kind)                                            \
  class Kind : public Error {                                             \
   public:                                                                \
    explicit Kind(const std::string& what) : Error(#Kind, what) {}        \
  };

SWF_DEFINE_ERROR(SingularMatrix)
SWF_DEFINE_ERROR(GenusMismatch)
SWF_DEFINE_ERROR(DomainError)
SWF_DEFINE_ERROR(InconsistentRecursion)
SWF_DEFINE_ERROR(VerificationFailure)
SWF_DEFINE_ERROR(ParseError)

#undef SWF_DEFINE_ERROR

}  // namespace swf
