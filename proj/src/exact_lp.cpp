#include "tropid/exact_lp.hpp"

#include <numeric>

namespace tropid::lp {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kSmallLimit = static_cast<i128>(1) << 62;

Direction reduce(std::vector<i128> c) {
  i128 g = 0;
  for (i128 v : c) g = gcd128(g, v);
  if (g > 1) {
    for (i128& v : c) v /= g;
  }
  Direction d;
  bool fits = true;
  for (i128 v : c) fits = fits && abs128(v) < kSmallLimit;
  if (fits) {
    d.small = std::move(c);
  } else {
    d.big.reserve(c.size());
    for (i128 v : c) {
      // cpp_int has no __int128 constructor on every platform
      const bool neg = v < 0;
      unsigned __int128 u = static_cast<unsigned __int128>(neg ? -v : v);
      BigInt b = BigInt(static_cast<std::uint64_t>(u >> 64));
      b <<= 64;
      b += static_cast<std::uint64_t>(u);
      d.big.push_back(neg ? BigInt(-b) : b);
    }
  }
  return d;
}

Direction reduce(std::vector<BigInt> c) {
  BigInt g = 0;
  for (const BigInt& v : c) g = boost::multiprecision::gcd(g, v);
  if (g > 1) {
    for (BigInt& v : c) v /= g;
  }
  Direction d;
  const BigInt limit = BigInt(1) << 62;
  bool fits = true;
  for (const BigInt& v : c) fits = fits && abs(v) < limit;
  if (fits) {
    d.small.reserve(c.size());
    for (const BigInt& v : c) d.small.push_back(static_cast<i128>(v.convert_to<long long>()));
  } else {
    d.big = std::move(c);
  }
  return d;
}

}  // namespace

MembershipResult convex_membership(const PointSet& points, std::span<const std::size_t> columns, PointView p) {
  MembershipResult result;
  try {
    Tableau<i128> t(points, columns, p);
    result.inside = t.solve();
    if (!result.inside) result.separator = reduce(t.separator());
    return result;
  } catch (const Overflow&) {
  }
  Tableau<BigInt> t(points, columns, p);
  result.inside = t.solve();
  if (!result.inside) result.separator = reduce(t.separator());
  return result;
}

}  // namespace tropid::lp
