#ifndef ALE_ERRORS_HPP
#define ALE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ale {

// Malformed or inconsistent input data (bad JSON, out-of-range fields, ...).
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but a numerical procedure cannot handle it
// (evaluation on a center, degenerate germ, failed continuation, ...).
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

// Root collision detected on the tracking loop; caller may retry with the
// suggested smaller radius.
class RootCollisionError : public NumericsError {
 public:
  RootCollisionError(const std::string& what, double suggested)
      : NumericsError(what), suggested_radius(suggested) {}
  double suggested_radius;
};

}  // namespace ale

#endif
