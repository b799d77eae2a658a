#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace semibandit {

// A binary d-vector: one entry per arm, 1 when the arm is in the played subset.
using Action = std::vector<std::uint8_t>;

// Real d-vectors: losses, estimates, and points x in conv(X).
using Vector = std::vector<double>;
using FractionalPoint = Vector;

using Rng = std::mt19937_64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Evaluation outside the open domain of a regularizer (log/sqrt singularities).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class FeasibilityError : public Error {
 public:
  FeasibilityError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Uniform draw on [0, 1) using the top 53 bits of one engine output.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace semibandit
