#pragma once

#include <stdexcept>
#include <string>

namespace qgc {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Quasigroup table construction and lookup failures.
class TableError final : public Error {
public:
  enum class Kind {
    duplicate_in_row,
    duplicate_in_column,
    symbol_out_of_range,
    order_out_of_range,
    order_too_large_for_exhaustive,
  };

  TableError(Kind kind, int index, const std::string& what)
      : Error(what), kind_(kind), index_(index) {}

  Kind kind() const { return kind_; }
  // Offending row/column/order where meaningful, -1 otherwise.
  int index() const { return index_; }

private:
  Kind kind_;
  int index_;
};

// Block cipher layer failures.
class CipherError final : public Error {
public:
  enum class Kind {
    wrong_table_order,
    unaligned_input,
  };

  CipherError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// CBC envelope parsing and padding failures.
class EnvelopeError final : public Error {
public:
  enum class Kind {
    malformed_envelope,
    bad_padding,
  };

  EnvelopeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Statistical test preconditions.
class StsError final : public Error {
public:
  enum class Kind {
    sequence_too_short,
    bad_parameter,
  };

  StsError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Cipher registry failures.
class RegistryError final : public Error {
public:
  enum class Kind {
    duplicate_name,
    smoke_test_failed,
    unknown_cipher,
  };

  RegistryError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// WAV container failures.
class WavError final : public Error {
public:
  enum class Kind {
    not_riff,
    unsupported_format,
    truncated_chunk,
  };

  WavError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// File and stream I/O failures (open, parse, write).
class IoError final : public Error {
public:
  using Error::Error;
};

}  // namespace qgc
