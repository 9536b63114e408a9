// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphtmi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed or inconsistent dataset files.
class DatasetError : public Error {
 public:
  DatasetError(const std::string& path, std::size_t line, const std::string& what)
      : Error(path + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        path_(path),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  /// 1-based; 0 when the problem is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace graphtmi
