#pragma once

#include <stdexcept>
#include <string>

namespace keylift {

// Bad argument to a library operation (k out of range, empty set, ...).
class ParameterError : public std::runtime_error {
 public:
  explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// Index file is missing, truncated, or not a keylift index.
class IndexFormatError : public std::runtime_error {
 public:
  explicit IndexFormatError(const std::string& what) : std::runtime_error(what) {}
};

// Index was built under a different normalization; its counts are not comparable.
class FingerprintMismatchError : public std::runtime_error {
 public:
  explicit FingerprintMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// A JSON artifact (keyphrase list, report) failed to parse or validate.
class JsonFormatError : public std::runtime_error {
 public:
  explicit JsonFormatError(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateDocIdError : public std::runtime_error {
 public:
  explicit DuplicateDocIdError(const std::string& doc_id)
      : std::runtime_error("duplicate doc_id: " + doc_id), doc_id_(doc_id) {}
  const std::string& doc_id() const noexcept { return doc_id_; }

 private:
  std::string doc_id_;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace keylift
