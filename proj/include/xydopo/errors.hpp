#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xydopo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure did not reach the requested accuracy.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Both couplings vanish: free spins, no transition.
class DegenerateModel : public Error {
 public:
  using Error::Error;
};

class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

/// Some DOPO mode has Omega_k^2 < 0.
class UnstablePhase : public Error {
 public:
  UnstablePhase(const std::string& what, std::vector<double> momenta)
      : Error(what), momenta_(std::move(momenta)) {}
  /// Offending grid momenta (finite grids) or window endpoints (continuum).
  const std::vector<double>& momenta() const noexcept { return momenta_; }

 private:
  std::vector<double> momenta_;
};

/// Requested the drive amplitude of a parameter set with D^2 < 0.
class NonphysicalDrive : public Error {
 public:
  using Error::Error;
};

/// Mode at or beyond threshold has no squeezed-vacuum Bogoliubov form.
class NoSqueezedVacuum : public Error {
 public:
  using Error::Error;
};

/// XY -> DOPO map is undefined because jx * jy == 0.
class SingularMap : public Error {
 public:
  using Error::Error;
};

}  // namespace xydopo
