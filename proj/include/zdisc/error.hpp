#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zdisc {

using cplx = std::complex<double>;

enum class ErrorCode {
  domain,             // argument outside the mathematical domain (|z| >= 1, x <= 0, ...)
  overflow,           // degree or size bound exceeded
  path,               // evaluation path not admissible at this argument
  parse,              // observable expression syntax error
  invalid_argument,   // precondition violated (non-terminating series, bad index, ...)
  convergence,        // eigen-solve or truncation did not converge
  cutoff,             // coherent-state cutoff exceeded the hard cap
  metadata_mismatch,  // operator matrices built on different bases
  evaluation,         // observable evaluation failed (zero denominator, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace zdisc
