#ifndef MZK_ERROR_HPP_
#define MZK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mzk {

// Domain error carrying a stable machine-readable code ("CrossingEdges",
// "WidthMismatch", ...) alongside the human-readable message.
class MzkError : public std::runtime_error {
 public:
  MzkError(std::string code, std::string const& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  std::string const& code() const noexcept {
    return code_;
  }

 private:
  std::string code_;
};

[[noreturn]] inline void throw_error(std::string code, std::string const& msg) {
  throw MzkError(std::move(code), msg);
}

}  // namespace mzk

#endif  // MZK_ERROR_HPP_
