#pragma once

#include <stdexcept>
#include <string>

namespace clocksim {

// Base class for all library errors. Carries the module that raised it so the
// CLI can name the failing component in diagnostics.
class error : public std::runtime_error {
 public:
  error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

// Input outside an operation's documented domain (bad epoch, bad element set,
// invalid mode/argument combination).
class domain_error : public error {
 public:
  using error::error;
};

// Evaluation requested at (or too close to) a field singularity.
class singularity_error : public error {
 public:
  using error::error;
};

// A variant field (e.g. a metric extension) does not carry the parameters the
// operation needs.
class variant_error : public error {
 public:
  using error::error;
};

// Signal path intersects an occulting body.
class occultation_error : public error {
 public:
  using error::error;
};

// An iteration or quadrature failed to converge to its tolerance.
class numeric_error : public error {
 public:
  using error::error;
};

// A self-check detected integration error above the advertised bound.
class accuracy_error : public error {
 public:
  using error::error;
};

// Normal equations singular or too ill-conditioned to invert.
class rank_error : public error {
 public:
  using error::error;
};

}  // namespace clocksim
