#pragma once

#include <gmpxx.h>

#include "slicecert/homology.hpp"

namespace slicecert {

// gmpxx has no long long overloads; Int fits in long on LP64 targets.
static_assert(sizeof(long) >= 8, "LP64 target expected");

inline mpz_class mpz_of(Int v) { return mpz_class(static_cast<long>(v)); }

inline mpq_class mpq_of(Int num, Int den = 1) {
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace slicecert
