#include "qca/lpoly.hpp"

namespace qca {
namespace lpoly_detail {

namespace {
constexpr std::int64_t kMulInputLimit = std::int64_t(1) << 55;
constexpr size_t kMulLengthLimit = size_t(1) << 9;
}  // namespace

void mul_into(std::vector<std::int64_t>& out, const std::vector<std::int64_t>& a,
              const std::vector<std::int64_t>& b) {
  if (a.size() > kMulLengthLimit || b.size() > kMulLengthLimit)
    throw OverflowError("LPoly: multiplication operands too long for the fast path");
  for (std::int64_t x : a)
    if (x > kMulInputLimit || x < -kMulInputLimit)
      throw OverflowError("LPoly: coefficient above fast-path input limit");
  for (std::int64_t x : b)
    if (x > kMulInputLimit || x < -kMulInputLimit)
      throw OverflowError("LPoly: coefficient above fast-path input limit");
  out.assign(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      // Safe: |a_i * b_j| <= 2^110 and at most 2^9 summands, so the running
      // value stays far below the __int128 range.
      __int128 acc = static_cast<__int128>(out[i + j]) +
                     static_cast<__int128>(a[i]) * static_cast<__int128>(b[j]);
      if (acc > INT64_MAX || acc < INT64_MIN)
        throw OverflowError("LPoly: product coefficient exceeds int64");
      out[i + j] = static_cast<std::int64_t>(acc);
    }
  }
}

void mul_into(std::vector<Integer>& out, const std::vector<Integer>& a,
              const std::vector<Integer>& b) {
  out.assign(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("LPoly: sum exceeds int64");
  return r;
}

std::int64_t checked_neg(std::int64_t x) {
  if (x == INT64_MIN) throw OverflowError("LPoly: negation exceeds int64");
  return -x;
}

std::string coeff_str(std::int64_t c) { return std::to_string(c); }
std::string coeff_str(const Integer& c) { return c.get_str(); }

}  // namespace lpoly_detail

LPolyBig widen(const LPolyFast& p) {
  if (p.is_zero()) return LPolyBig();
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (std::int64_t x : p.coeffs()) c.emplace_back(static_cast<long>(x));
  return LPolyBig::from_coeffs(p.lo(), std::move(c));
}

template <class C>
Scalar to_scalar(const LPoly<C>& p) {
  if (p.is_zero()) return Scalar();
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return Scalar::make(Rational(1), p.lo(), ZPoly(std::move(c)), ZPoly::one());
}

template Scalar to_scalar<std::int64_t>(const LPoly<std::int64_t>&);
template Scalar to_scalar<Integer>(const LPoly<Integer>&);

LPolyBig lpoly_from_scalar(const Scalar& s) {
  if (s.is_zero()) return LPolyBig();
  if (!s.den().is_one())
    throw Error("lpoly_from_scalar: not a Laurent polynomial: " + s.str());
  if (s.c().get_den() != 1)
    throw Error("lpoly_from_scalar: non-integer content: " + s.str());
  std::vector<Integer> c;
  c.reserve(s.num().coeffs().size());
  for (const auto& x : s.num().coeffs()) c.emplace_back(x * s.c().get_num());
  return LPolyBig::from_coeffs(s.e(), std::move(c));
}

}  // namespace qca
