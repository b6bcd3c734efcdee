#ifndef KBRACKET_ERROR_HPP
#define KBRACKET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace kbracket {

// Every failure carries a machine-readable class ("parse.missing-passage",
// "web.invalid", "move.inapplicable", ...) next to the human message.
class Error : public std::runtime_error {
public:
  Error(std::string cls, const std::string& message)
      : std::runtime_error(message), cls_(std::move(cls)) {}

  const std::string& cls() const { return cls_; }

private:
  std::string cls_;
};

} // namespace kbracket

#endif
