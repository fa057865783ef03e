#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace irrhodge {

using Int = mpz_class;
using Rat = mpq_class;

/// Base error for the library; CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Truncation did not settle; carries the last two disagreeing values.
struct StabilizationError : Error {
  using Error::Error;
};

struct MaxStepsError : Error {
  using Error::Error;
};

inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Parses "p", "-p/q" etc.; denominator must be nonzero.
Rat parse_rat(const std::string& s);

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw Error("integer out of long range: " + z.get_str());
  return z.get_si();
}

}  // namespace irrhodge
