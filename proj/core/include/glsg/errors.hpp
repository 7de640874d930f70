#pragma once

#include <stdexcept>
#include <string>

namespace glsg {

// Base of all domain errors. what() is a single machine-parseable line:
// the error code followed by space-separated "key=value" fields.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + " " + detail),
        code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class NotSquareError : public Error {
 public:
  NotSquareError(int rows, int row, int row_len)
      : Error("NotSquare", "rows=" + std::to_string(rows) + " row=" + std::to_string(row) +
                               " len=" + std::to_string(row_len)) {}
  explicit NotSquareError(const std::string& detail) : Error("NotSquare", detail) {}
};

class EntryOutOfRangeError : public Error {
 public:
  EntryOutOfRangeError(int i, int j, int value)
      : Error("EntryOutOfRange", "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                     " value=" + std::to_string(value)),
        i(i),
        j(j),
        value(value) {}

  int i, j, value;  // 1-based cell, offending entry
};

class NotAssociativeError : public Error {
 public:
  NotAssociativeError(int i, int j, int k)
      : Error("NotAssociative", "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                    " k=" + std::to_string(k)),
        i(i),
        j(j),
        k(k) {}

  int i, j, k;  // first witness triple in row-major order, 1-based
};

class GroupInvalidError : public Error {
 public:
  explicit GroupInvalidError(const std::string& reason) : Error("GroupInvalid", reason) {}
};

class NotNullError : public Error {
 public:
  NotNullError() : Error("NotNull", "table is not constant") {}
};

class UnknownFormatError : public Error {
 public:
  explicit UnknownFormatError(const std::string& name) : Error("UnknownFormat", "format=" + name) {}
};

class OrderTooLargeError : public Error {
 public:
  OrderTooLargeError(int order, int max_order)
      : Error("OrderTooLarge",
              "order=" + std::to_string(order) + " max=" + std::to_string(max_order)) {}
};

class GraphTooLargeError : public Error {
 public:
  GraphTooLargeError(long long vertices, long long cap)
      : Error("GraphTooLarge",
              "vertices=" + std::to_string(vertices) + " cap=" + std::to_string(cap)) {}
};

class UnsupportedFamilyError : public Error {
 public:
  explicit UnsupportedFamilyError(const std::string& detail)
      : Error("UnsupportedFamily", detail) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& detail) : Error("ParseError", detail) {}
};

class NonSymmetricError : public Error {
 public:
  NonSymmetricError(int i, int j)
      : Error("NonSymmetric", "i=" + std::to_string(i) + " j=" + std::to_string(j)) {}
  explicit NonSymmetricError(const std::string& detail) : Error("NonSymmetric", detail) {}
};

class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(int sweeps)
      : Error("NoConvergence", "sweeps=" + std::to_string(sweeps)) {}
};

class CheckpointError : public Error {
 public:
  explicit CheckpointError(const std::string& detail) : Error("CheckpointError", detail) {}
};

class CancelledError : public Error {
 public:
  CancelledError() : Error("Cancelled", "") {}
};

}  // namespace glsg
