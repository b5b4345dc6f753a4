#pragma once

#include <stdexcept>
#include <string>

namespace eqg {

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct NoActionError : std::runtime_error {
  explicit NoActionError(const std::string& what) : std::runtime_error(what) {}
};

struct NoDataError : std::runtime_error {
  explicit NoDataError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedLayerError : std::runtime_error {
  explicit UnsupportedLayerError(const std::string& what) : std::runtime_error(what) {}
};

struct SceneTooCrowdedError : std::runtime_error {
  explicit SceneTooCrowdedError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqg
