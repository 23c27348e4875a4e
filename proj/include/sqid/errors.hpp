#pragma once

#include <stdexcept>
#include <string>

namespace sqid {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct NoImaginaryUnit : Error {
  explicit NoImaginaryUnit(const std::string& what) : Error(what) {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& what) : Error(what) {}
};

struct DegreeMismatch : Error {
  explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct OddDegree : Error {
  explicit OddDegree(const std::string& what) : Error(what) {}
};

struct BadModulus : Error {
  explicit BadModulus(const std::string& what) : Error(what) {}
};

struct DependentInput : Error {
  explicit DependentInput(const std::string& what) : Error(what) {}
};

struct NotSubgeneric : Error {
  explicit NotSubgeneric(const std::string& what) : Error(what) {}
};

struct NotApolar : Error {
  explicit NotApolar(const std::string& what) : Error(what) {}
};

}  // namespace sqid
