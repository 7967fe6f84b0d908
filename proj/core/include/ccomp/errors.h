#ifndef CCOMP_ERRORS_H_
#define CCOMP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ccomp {

// Bad or unreadable input: missing files, schema violations, corrupt models.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or configuration supplied by the caller.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unterminated block comment and similar lexical failures in Java sources.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line)
      : InputError(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace ccomp

#endif  // CCOMP_ERRORS_H_
