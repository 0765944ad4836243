#ifndef EXPWIN_ERRORS_HPP
#define EXPWIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expwin {

enum class ErrorKind {
  InvalidKernel,
  BadParameter,
  NoNullsFound,
  InsufficientLobes,
  NotConverged,
  ParseError,
};

const char* to_string(ErrorKind kind);

class WindowError : public std::runtime_error {
 public:
  WindowError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace expwin

#endif  // EXPWIN_ERRORS_HPP
