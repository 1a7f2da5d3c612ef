#pragma once

#include <stdexcept>
#include <string>

namespace imguard {

/// Violated API precondition (caller bug): mismatched shapes, missing flags.
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

/// Parameter outside its documented range (bad sigma, quality, factor).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Input file exists but is not in a supported format.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem-level failure: unreadable or unwritable path.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace imguard
