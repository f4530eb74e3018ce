#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "momentcf/rational.hpp"

namespace momentcf {

// Base of every domain error the library reports. `name()` is the stable
// machine-readable identifier; `details()` lists typed payload fields as
// key/value strings for structured rendering.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ~Error() = default;
  virtual const char* name() const { return "Error"; }
  virtual std::vector<std::pair<std::string, std::string>> details() const { return {}; }
};

class ReciprocalOfZeroConstantTerm : public Error {
public:
  ReciprocalOfZeroConstantTerm()
      : Error("series reciprocal requires a nonzero constant term") {}
  const char* name() const override { return "ReciprocalOfZeroConstantTerm"; }
};

// Raised by sfrac_from_series when a residual series has zero constant term
// but a nonzero tail; `level` is the index of the coefficient being peeled.
class NotSFractionRepresentable : public Error {
public:
  explicit NotSFractionRepresentable(int level)
      : Error("series has no S-fraction expansion: residual at level " +
              std::to_string(level) + " vanishes at 0 with a nonzero tail"),
        level_(level) {}
  const char* name() const override { return "NotSFractionRepresentable"; }
  int level() const { return level_; }
  std::vector<std::pair<std::string, std::string>> details() const override {
    return {{"level", std::to_string(level_)}};
  }

private:
  int level_;
};

class NotJFractionRepresentable : public Error {
public:
  explicit NotJFractionRepresentable(int level)
      : Error("series has no J-fraction expansion: residual at level " +
              std::to_string(level) + " has zero t^2 coefficient with a nonzero tail"),
        level_(level) {}
  const char* name() const override { return "NotJFractionRepresentable"; }
  int level() const { return level_; }
  std::vector<std::pair<std::string, std::string>> details() const override {
    return {{"level", std::to_string(level_)}};
  }

private:
  int level_;
};

// Raised by uncontract when alpha'_{2n-1} = 0 while beta_n != 0.
class UncontractionBreakdown : public Error {
public:
  explicit UncontractionBreakdown(int index)
      : Error("uncontraction impossible at n = " + std::to_string(index) +
              ": alpha'_{2n-1} = 0 while beta_n != 0"),
        index_(index) {}
  const char* name() const override { return "UncontractionBreakdown"; }
  int index() const { return index_; }
  std::vector<std::pair<std::string, std::string>> details() const override {
    return {{"index", std::to_string(index_)}};
  }

private:
  int index_;
};

// Raised by alpha_from_g on a g outside [0,1].
class GOutOfRange : public Error {
public:
  GOutOfRange(int index, Rational value)
      : Error("g_" + std::to_string(index) + " = " + momentcf::to_string(value) +
              " lies outside [0,1]"),
        index_(index),
        value_(std::move(value)) {}
  const char* name() const override { return "GOutOfRange"; }
  int index() const { return index_; }
  const Rational& value() const { return value_; }
  std::vector<std::pair<std::string, std::string>> details() const override {
    return {{"index", std::to_string(index_)}, {"value", momentcf::to_string(value_)}};
  }

private:
  int index_;
  Rational value_;
};

// Raised by catalan_audit when a coefficient is outside [0,1].
class AlphaOutOfRange : public Error {
public:
  explicit AlphaOutOfRange(int index)
      : Error("alpha_" + std::to_string(index) + " lies outside [0,1]"), index_(index) {}
  const char* name() const override { return "AlphaOutOfRange"; }
  int index() const { return index_; }
  std::vector<std::pair<std::string, std::string>> details() const override {
    return {{"index", std::to_string(index_)}};
  }

private:
  int index_;
};

// Raised by sqrt_aerate on an atom whose location has no rational square root.
class NonSquareAtom : public Error {
public:
  explicit NonSquareAtom(Rational location)
      : Error("atom location " + momentcf::to_string(location) +
              " is not the square of a rational"),
        location_(std::move(location)) {}
  const char* name() const override { return "NonSquareAtom"; }
  const Rational& location() const { return location_; }
  std::vector<std::pair<std::string, std::string>> details() const override {
    return {{"location", momentcf::to_string(location_)}};
  }

private:
  Rational location_;
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
  const char* name() const override { return "ParseError"; }
};

}  // namespace momentcf
