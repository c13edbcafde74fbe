#pragma once

#include <gtest/gtest.h>

#include "elimkit.hpp"
#include "elimkit/random.hpp"
#include "elimkit/suites.hpp"

namespace elimkit::test {

template <class K = ZZ>
Poly<K> X(int n, int i, const K& k = K{}) {
  return Poly<K>::variable(k, n, i);
}

template <class K = ZZ>
Poly<K> mono(int n, std::vector<int> e, long c = 1, const K& k = K{}) {
  return Poly<K>::monomial(k, n, std::move(e), k.from_int(c));
}

inline Poly<ZZ> operator*(long c, const Poly<ZZ>& p) { return p.scale(mpz_class(c)); }

}  // namespace elimkit::test
