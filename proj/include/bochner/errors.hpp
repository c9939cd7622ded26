#pragma once

#include <stdexcept>
#include <string>

namespace bochner {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Coefficient list violating deg(a_i) <= i, or without derivative terms.
class InvalidOperator : public Error {
 public:
  using Error::Error;
};

/// A table or data set does not reach the index an operation needs.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Polynomial family that is not monic with deg P_n = n.
class InvalidEigenSystem : public Error {
 public:
  using Error::Error;
};

/// Two eigenvalues coincide (or lambda_n = 0 for n >= 1, reported as a
/// collision with index 0).
class DegenerateSpectrum : public Error {
 public:
  DegenerateSpectrum(int first, int second)
      : Error("degenerate spectrum: lambda_" + std::to_string(first) +
              " == lambda_" + std::to_string(second)),
        first_(first),
        second_(second) {}

  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

/// Eigen-data inconsistent with any operator of the requested order.
/// (n, k) is the first delta entry breaking the finite-order criterion.
class NoFiniteOrderOperator : public Error {
 public:
  NoFiniteOrderOperator(int order, int n, int k)
      : Error("no operator of order " + std::to_string(order) +
              " fits the data: criterion fails at delta_" + std::to_string(n) +
              "^(" + std::to_string(k) + ")"),
        order_(order),
        n_(n),
        k_(k) {}

  int order() const noexcept { return order_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

 private:
  int order_;
  int n_;
  int k_;
};

}  // namespace bochner
