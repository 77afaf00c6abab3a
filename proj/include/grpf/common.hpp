#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace grpf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
  InvalidRank,      // n too small, k out of range
  Dominance,        // weight is not (Levi-)dominant
  RankMismatch,     // KClass arithmetic across different n
  Parity,           // odd/even requirement violated
  Dimension,        // inconsistent dimension data
  DegenerateFamily, // AMap matrix not of full rank k
  Integrity,        // internal consistency check failed
  Parse,            // malformed input file
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

BigInt binomial(long n, long k);

}  // namespace grpf
