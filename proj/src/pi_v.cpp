#include "qca/pi_v.hpp"

namespace qca {

namespace {

/// Add v at the 1-based matrix-unit position e_{a,b}.
void put(Matrix<Scalar>& m, int a, int b, const Scalar& v) {
  m(a - 1, b - 1) = m(a - 1, b - 1) + v;
}

}  // namespace

PiV::PiV(int n, const QMode& qm)
    : n_(n), qm_(qm), index_(n), cartan_(cartan_data(n, 1, qm)) {}

void PiV::require_index(int i) const {
  if (i < 1 || i > n_)
    throw IndexError("PiV: generator index " + std::to_string(i) +
                     " outside [1, " + std::to_string(n_) + "]");
}

Matrix<Scalar> PiV::xplus(int i, int k) const {
  require_index(i);
  Matrix<Scalar> m(dim(), dim());
  if (i == n_) {
    put(m, n_ + 1, n_, -qm_.q_power(static_cast<long>(-(n_ + 1)) * k));
    return m;
  }
  put(m, i + 1, i, -qm_.q_power(static_cast<long>(-i) * k));
  put(m, index_.prime(i), index_.prime(i + 1),
      qm_.q_power(static_cast<long>(-(2 * n_ + 2 - i)) * k));
  return m;
}

Matrix<Scalar> PiV::xminus(int i, int k) const {
  require_index(i);
  Matrix<Scalar> m(dim(), dim());
  if (i == n_) {
    put(m, n_, n_ + 1, -qm_.q_power(static_cast<long>(-(n_ + 1)) * k));
    return m;
  }
  put(m, i, i + 1, -qm_.q_power(static_cast<long>(-i) * k));
  put(m, index_.prime(i + 1), index_.prime(i),
      qm_.q_power(static_cast<long>(-(2 * n_ + 2 - i)) * k));
  return m;
}

Matrix<Scalar> PiV::a_mode(int i, int k) const {
  require_index(i);
  if (k == 0) throw ConfigError("PiV::a_mode: the mode index must be nonzero");
  const long ri = cartan_.r[static_cast<size_t>(i - 1)];
  const Scalar coef = qm_.q_int(k, ri) / Scalar(k);
  Matrix<Scalar> m(dim(), dim());
  if (i == n_) {
    const Scalar lead = coef * qm_.q_power(static_cast<long>(-(n_ + 1)) * k);
    put(m, n_ + 1, n_ + 1, lead * qm_.q_power(-2L * k));
    put(m, n_, n_, -(lead * qm_.q_power(2L * k)));
    return m;
  }
  const Scalar low = coef * qm_.q_power(static_cast<long>(-i) * k);
  const Scalar high = coef * qm_.q_power(static_cast<long>(-(2 * n_ + 2 - i)) * k);
  put(m, i + 1, i + 1, low * qm_.q_power(-k));
  put(m, i, i, -(low * qm_.q_power(k)));
  put(m, index_.prime(i), index_.prime(i), high * qm_.q_power(-k));
  put(m, index_.prime(i + 1), index_.prime(i + 1), -(high * qm_.q_power(k)));
  return m;
}

Matrix<Scalar> PiV::k_image(int i) const {
  require_index(i);
  Matrix<Scalar> m(dim(), dim());
  auto setd = [&](int j, long e) { m(j - 1, j - 1) = qm_.q_power(e); };
  for (int j = 1; j <= dim(); ++j) setd(j, 0);
  if (i == n_) {
    setd(n_ + 1, 2);
    setd(n_, -2);
    return m;
  }
  setd(i + 1, 1);
  setd(index_.prime(i), 1);
  setd(i, -1);
  setd(index_.prime(i + 1), -1);
  return m;
}

PiV pi_v(int n, const QMode& qm) { return PiV(n, qm); }

}  // namespace qca
