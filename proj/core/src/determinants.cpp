#include "nilcayley/determinants.hpp"

#include <algorithm>
#include <numeric>

namespace nilcayley {

SignedPermutations signed_permutations(std::size_t n) {
  SignedPermutations out;
  std::vector<std::uint8_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    out.perms.push_back(perm);
    out.signs.push_back(inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Rational charpoly_leading_scalar(std::size_t n, int k) {
  Rational factorial(1);
  for (std::size_t i = 2; i + 1 <= n; ++i) factorial *= Rational(static_cast<long>(i));
  // exponent 1 + n + ... + n^{k-1}
  std::size_t exponent = 0;
  std::size_t power = 1;
  for (int i = 0; i < k; ++i) {
    exponent += power;
    power *= n;
  }
  Rational out(static_cast<long>(n));
  for (std::size_t i = 0; i < exponent; ++i) out *= factorial;
  return out;
}

}  // namespace nilcayley
