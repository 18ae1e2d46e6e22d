#ifndef DBCELL_RATIONAL_HPP
#define DBCELL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "dbcell/errors.hpp"

namespace dbcell {

// Exact rational scalar. All arithmetic in the library is exact; there is no
// floating-point mode anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// "p" or "p/q"; q > 0 after canonicalization.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline long rat_to_long(const Rat& q) {
  if (!is_integer(q)) throw IntegrityError("expected integer, got " + rat_str(q));
  if (!q.get_num().fits_slong_p()) throw IntegrityError("integer out of long range");
  return q.get_num().get_si();
}

}  // namespace dbcell

#endif
