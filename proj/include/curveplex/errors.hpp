#pragma once

#include <stdexcept>
#include <string>

namespace curveplex {

/// Base for all domain errors. CLI maps these to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyAfterReduction : Error {
  EmptyAfterReduction() : Error("word reduces to the empty word") {}
};

struct NotSimple : Error {
  explicit NotSimple(const std::string& what) : Error("curve is not simple: " + what) {}
};

struct NotDisjoint : Error {
  explicit NotDisjoint(const std::string& what) : Error("curves are not disjoint: " + what) {}
};

struct DisjointInput : Error {
  DisjointInput() : Error("curves are disjoint; no crossing data") {}
};

struct BadCrossingData : Error {
  explicit BadCrossingData(const std::string& what) : Error("bad crossing data: " + what) {}
};

struct NoLane : Error {
  explicit NoLane(const std::string& what) : Error("no usable lane: " + what) {}
};

struct BadArc : Error {
  explicit BadArc(const std::string& what) : Error("bad band-sum arc: " + what) {}
};

struct CenterAmbiguous : Error {
  explicit CenterAmbiguous(const std::string& what) : Error("center is not unique: " + what) {}
};

struct DimensionViolation : Error {
  explicit DimensionViolation(const std::string& what) : Error("mixed simplex above dimension 3: " + what) {}
};

struct SearchExhausted : Error {
  explicit SearchExhausted(const std::string& what) : Error("search budget exhausted: " + what) {}
};

struct RingMiss : Error {
  explicit RingMiss(const std::string& what) : Error("base curve misses every ring: " + what) {}
};

/// Internal invariant failures (canonicalization overflow, engine inconsistency).
struct Internal : Error {
  explicit Internal(const std::string& what) : Error("internal invariant violated: " + what) {}
};

/// Bad user input / configuration. CLI maps these to exit code 1.
struct BadInput : std::runtime_error {
  explicit BadInput(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace curveplex
