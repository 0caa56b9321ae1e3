#pragma once

#include <stdexcept>
#include <string>

namespace tiercrawl {

// One exception type per contract-level failure. Callers catch the specific
// type when they can recover and Error at module boundaries otherwise.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedUri : Error {
  explicit MalformedUri(const std::string& what) : Error("malformed uri: " + what) {}
};

struct RelativeUri : Error {
  explicit RelativeUri(const std::string& what) : Error("relative uri: " + what) {}
};

struct PolicyMismatch : Error {
  using Error::Error;
};

struct EmptyInput : Error {
  using Error::Error;
};

struct UnparseableMarkup : Error {
  using Error::Error;
};

struct DegenerateTrainingSet : Error {
  using Error::Error;
};

struct ModeMismatch : Error {
  using Error::Error;
};

struct TooFewExamples : Error {
  using Error::Error;
};

struct UndefinedMetric : Error {
  using Error::Error;
};

struct ManifestMiss : Error {
  using Error::Error;
};

struct SeedMismatch : Error {
  using Error::Error;
};

struct NoSeeds : Error {
  using Error::Error;
};

struct BrowserUnavailable : Error {
  using Error::Error;
};

struct CrashedTab : Error {
  using Error::Error;
};

struct PortInUse : Error {
  using Error::Error;
};

struct IoFailure : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace tiercrawl
