// Exception hierarchy shared by every metrix module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metrix {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  // Short machine-readable name, used in the errors sidecar.
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class MalformedConllu : public Error {
 public:
  MalformedConllu(std::size_t line_no, const std::string& what)
      : Error("MalformedConllu",
              "line " + std::to_string(line_no) + ": " + what),
        line_no_(line_no) {}
  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::size_t line_no_;
};

class EmptyDocument : public Error {
 public:
  EmptyDocument()
      : Error("EmptyDocument", "document has no sentence with a word") {}
};

class AnnotatorFailure : public Error {
 public:
  explicit AnnotatorFailure(const std::string& diagnostic)
      : Error("AnnotatorFailure", "annotator failed: " + diagnostic) {}
};

class LexiconFormatError : public Error {
 public:
  LexiconFormatError(std::size_t line_no, const std::string& what)
      : Error("LexiconFormatError",
              "line " + std::to_string(line_no) + ": " + what),
        line_no_(line_no) {}
  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::size_t line_no_;
};

class NotEnoughTokens : public Error {
 public:
  NotEnoughTokens(std::size_t have, std::size_t need)
      : Error("NotEnoughTokens", "need at least " + std::to_string(need) +
                                     " items, got " + std::to_string(have)) {}
};

class DegenerateText : public Error {
 public:
  explicit DegenerateText(const std::string& what)
      : Error("DegenerateText", what) {}
};

class ProviderFailure : public Error {
 public:
  explicit ProviderFailure(const std::string& what)
      : Error("ProviderFailure", what) {}
};

class UnknownCategory : public Error {
 public:
  explicit UnknownCategory(const std::string& name)
      : Error("UnknownCategory", "unknown metric category: " + name) {}
};

class UnknownMetric : public Error {
 public:
  explicit UnknownMetric(const std::string& code)
      : Error("UnknownMetric", "unknown metric code: " + code) {}
};

class MissingMetric : public Error {
 public:
  explicit MissingMetric(const std::string& code)
      : Error("MissingMetric", "metric not produced by any slice: " + code),
        code_(code) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class DuplicateMetric : public Error {
 public:
  explicit DuplicateMetric(const std::string& code)
      : Error("DuplicateMetric", "metric produced twice: " + code),
        code_(code) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class DegenerateLabels : public Error {
 public:
  DegenerateLabels()
      : Error("DegenerateLabels", "need at least two distinct class labels") {}
};

class TooFewRows : public Error {
 public:
  explicit TooFewRows(const std::string& what) : Error("TooFewRows", what) {}
};

}  // namespace metrix
