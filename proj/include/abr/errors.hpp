#pragma once

#include <stdexcept>

namespace abr {

// Error categories map onto CLI exit codes: ConfigError -> 2, DataError -> 3,
// any other Error (or unexpected exception) -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct DataError : Error {
  using Error::Error;
};

// trace_store
struct MalformedLine : DataError {
  using DataError::DataError;
};
struct NonMonotonicTime : DataError {
  using DataError::DataError;
};
struct TooFewPoints : DataError {
  using DataError::DataError;
};
struct MissingFile : DataError {
  using DataError::DataError;
};
struct DuplicateTraceId : DataError {
  using DataError::DataError;
};
struct OverlappingRoles : DataError {
  using DataError::DataError;
};
struct BadLadder : DataError {
  using DataError::DataError;
};
struct EmptySet : DataError {
  using DataError::DataError;
};

// video_model
struct DimensionMismatch : DataError {
  using DataError::DataError;
};
struct NonPositiveSize : DataError {
  using DataError::DataError;
};
struct BadJitter : ConfigError {
  using ConfigError::ConfigError;
};

// net_sim
struct StalledForever : Error {
  using Error::Error;
};
struct EpisodeFinished : Error {
  using Error::Error;
};
struct BadAction : Error {
  using Error::Error;
};

// qoe
struct EmptyEpisode : DataError {
  using DataError::DataError;
};
struct NonFiniteEntry : DataError {
  using DataError::DataError;
};

// mlp / trainers
struct NonFiniteInput : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct NonFiniteGrad : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct EmptyBatch : Error {
  using Error::Error;
};

}  // namespace abr
