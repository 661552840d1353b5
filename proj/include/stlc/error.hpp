#ifndef STLC_ERROR_HPP
#define STLC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stlc {

// Base class for every library error. `code()` is the stable
// machine-readable identifier surfaced in the CLI's JSON mode.
struct error : std::runtime_error {
  error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct ill_typed : error {
  explicit ill_typed(const std::string& what) : error("IllTyped", what) {}
};

struct type_mismatch : error {
  explicit type_mismatch(const std::string& what)
      : error("TypeMismatch", what) {}
};

struct not_eta_long : error {
  explicit not_eta_long(const std::string& what) : error("NotEtaLong", what) {}
};

struct resource_exceeded : error {
  explicit resource_exceeded(const std::string& what)
      : error("ResourceExceeded", what) {}
};

struct model_too_large : error {
  explicit model_too_large(const std::string& what)
      : error("ModelTooLarge", what) {}
};

struct order_too_high : error {
  explicit order_too_high(const std::string& what)
      : error("OrderTooHigh", what) {}
};

struct same_term : error {
  explicit same_term(const std::string& what) : error("SameTerm", what) {}
};

struct not_closed : error {
  explicit not_closed(const std::string& what) : error("NotClosed", what) {}
};

struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error("ParseError", what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

struct reserved_name : error {
  explicit reserved_name(const std::string& name)
      : error("ReservedName",
              "identifier '" + name + "' uses the reserved z-prefix") {}
};

}  // namespace stlc

#endif
