#pragma once

#include <stdexcept>
#include <string>

namespace oidforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(int cap)
      : Error("resolution did not terminate within " + std::to_string(cap) + " levels"), cap(cap) {}
  int cap;
};

class NotExact : public Error {
 public:
  NotExact(int level, std::string witness)
      : Error("complex not exact at level " + std::to_string(level) + ": " + witness),
        level(level),
        witness(std::move(witness)) {}
  int level;
  std::string witness;
};

class LiftFailed : public Error {
 public:
  LiftFailed(int level, std::string witness)
      : Error("lift failed at level " + std::to_string(level) + ": " + witness),
        level(level),
        witness(std::move(witness)) {}
  int level;
  std::string witness;
};

class AnchorNotMorphism : public Error {
 public:
  explicit AnchorNotMorphism(std::string witness)
      : Error("anchor is not a bracket morphism on " + witness), witness(std::move(witness)) {}
  std::string witness;
};

class ClosednessViolated : public Error {
 public:
  ClosednessViolated(int n, std::string witness)
      : Error("obstruction at arity " + std::to_string(n) + " is not D-closed: " + witness),
        n(n),
        witness(std::move(witness)) {}
  int n;
  std::string witness;
};

class NotLieRinehartIdeal : public Error {
 public:
  explicit NotLieRinehartIdeal(std::string witness)
      : Error("ideal is not preserved by the anchor: " + witness), witness(std::move(witness)) {}
  std::string witness;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

}  // namespace oidforge
