#include "qca/cartan.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qca {

namespace {

/// Simple roots in the orthonormal basis: alpha_i = eps_i - eps_{i+1} for
/// i < n and alpha_n = 2 eps_n.  Row i-1 holds alpha_i.
std::vector<std::vector<long>> simple_roots(int n) {
  std::vector<std::vector<long>> roots(static_cast<size_t>(n),
                                       std::vector<long>(static_cast<size_t>(n), 0));
  for (int i = 1; i < n; ++i) {
    roots[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = 1;
    roots[static_cast<size_t>(i - 1)][static_cast<size_t>(i)] = -1;
  }
  roots[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] = 2;
  return roots;
}

long dot(const std::vector<long>& x, const std::vector<long>& y) {
  long s = 0;
  for (size_t t = 0; t < x.size(); ++t) s += x[t] * y[t];
  return s;
}

template <class F>
std::optional<std::tuple<int, int, F, F>> first_nonidentity(const Matrix<F>& m,
                                                            const F& one) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const F expect = i == j ? one : F();
      if (!(m(i, j) == expect)) return std::make_tuple(i, j, m(i, j), expect);
    }
  return std::nullopt;
}

std::string entry_name(int i, int j) {
  return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

Matrix<Scalar> CartanData::B_qk(int k) const {
  if (k == 0) throw ConfigError("B_qk: the deformation parameter power must be nonzero");
  const long r = k > 0 ? k : -k;  // [m]_{q^k} is even in k
  Matrix<Scalar> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& b = B(i, j);
      out(i, j) = qm.q_int(b.get_num().get_si(), r);
    }
  return out;
}

Matrix<Scalar> CartanData::Btilde_qk(int k) const {
  if (k == 0)
    throw ConfigError("Btilde_qk: the deformation parameter power must be nonzero");
  const long r = k > 0 ? k : -k;
  const Scalar d = qm.q_int(2, r * (n + 1));  // [2]_{q^{k(n+1)}}
  Matrix<Scalar> out(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      Scalar v;
      if (i == n && j == n)
        v = qm.q_int(n, r) / (qm.q_int(2, r) * d);
      else if (i == n)
        v = qm.q_int(j, r) / d;
      else
        v = qm.q_int(2, r * (n + 1 - i)) * qm.q_int(j, r) / d;
      out(i - 1, j - 1) = v;
      out(j - 1, i - 1) = v;
    }
  return out;
}

CartanData cartan_data(int n, int kmax, const QMode& qm) {
  if (n < 1) throw ConfigError("cartan_data: rank must be >= 1");
  if (kmax < 1) throw ConfigError("cartan_data: deformation window must be >= 1");

  CartanData cd;
  cd.n = n;
  cd.qm = qm;

  const auto roots = simple_roots(n);
  cd.A = Matrix<Rational>(n, n);
  cd.B = Matrix<Rational>(n, n);
  cd.r.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const long norm = dot(roots[static_cast<size_t>(i)], roots[static_cast<size_t>(i)]);
    cd.r[static_cast<size_t>(i)] = static_cast<int>(norm / 2);
    for (int j = 0; j < n; ++j) {
      const long ip = dot(roots[static_cast<size_t>(i)], roots[static_cast<size_t>(j)]);
      cd.A(i, j) = Rational(2 * ip) / Rational(norm);
      cd.B(i, j) = Rational(ip);
    }
  }

  // Closed form for the inverse of B.
  cd.Btilde = Matrix<Rational>(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      Rational v;
      if (i == n && j == n)
        v = Rational(n) / Rational(4);
      else if (i == n)
        v = Rational(j) / Rational(2);
      else
        v = Rational(j);
      cd.Btilde(i - 1, j - 1) = v;
      cd.Btilde(j - 1, i - 1) = v;
    }

  if (first_nonidentity(cd.Btilde * cd.B, Rational(1)))
    throw Error("cartan_data: closed-form inverse failed the defining product");
  for (int k = 1; k <= kmax; ++k)
    if (first_nonidentity(cd.Btilde_qk(k) * cd.B_qk(k), Scalar(1)))
      throw Error("cartan_data: deformed closed-form inverse failed at k=" +
                  std::to_string(k));
  return cd;
}

CheckReport check_cartan(int n, int kmax, const CheckOptions& opt) {
  CheckReport rep{"cartan", {}};

  rep.items.push_back(run_item(
      "cartan.inverse.n" + std::to_string(n),
      "closed form of the inverse symmetrized Cartan matrix: Btilde B = 1",
      [&]() -> CheckResult {
        CartanData cd = cartan_data(n, kmax, opt.qm);
        if (opt.perturb) cd.Btilde(0, 0) = cd.Btilde(0, 0) + 1;  // negative control
        const auto bad = first_nonidentity(cd.Btilde * cd.B, Rational(1));
        CheckResult res = exact_result(
            !bad.has_value(),
            "exact product of the closed-form inverse with B = CA over the rationals",
            bad ? rational_str(std::get<2>(*bad)) : "",
            bad ? rational_str(std::get<3>(*bad)) : "",
            bad ? entry_name(std::get<0>(*bad), std::get<1>(*bad)) : "");
        res.points = static_cast<long long>(n) * n;
        return res;
      }));

  rep.items.push_back(run_item(
      "cartan.gauss.n" + std::to_string(n),
      "closed-form inverse agrees with rational Gauss-Jordan elimination",
      [&]() -> CheckResult {
        CartanData cd = cartan_data(n, kmax, opt.qm);
        if (opt.perturb) cd.Btilde(0, 0) = cd.Btilde(0, 0) + 1;  // negative control
        const Matrix<Rational> ref = cd.B.inverse();
        std::optional<std::tuple<int, int, Rational, Rational>> bad;
        for (int i = 0; i < n && !bad; ++i)
          for (int j = 0; j < n && !bad; ++j)
            if (!(cd.Btilde(i, j) == ref(i, j)))
              bad = std::make_tuple(i, j, cd.Btilde(i, j), ref(i, j));
        CheckResult res = exact_result(
            !bad.has_value(),
            "entrywise match between the closed form and an independently "
            "computed inverse",
            bad ? rational_str(std::get<2>(*bad)) : "",
            bad ? rational_str(std::get<3>(*bad)) : "",
            bad ? entry_name(std::get<0>(*bad), std::get<1>(*bad)) : "");
        res.points = static_cast<long long>(n) * n;
        return res;
      }));

  for (int k = 1; k <= kmax; ++k) {
    rep.items.push_back(run_item(
        "cartan.q-inverse.n" + std::to_string(n) + ".k" + std::to_string(k),
        "closed form of the deformed inverse: Btilde(q^k) B(q^k) = 1",
        [&, k]() -> CheckResult {
          const CartanData cd = cartan_data(n, kmax, opt.qm);
          Matrix<Scalar> bt = cd.Btilde_qk(k);
          if (opt.perturb) bt(0, 0) = bt(0, 0) + Scalar(1);  // negative control
          const auto bad = first_nonidentity(bt * cd.B_qk(k), Scalar(1));
          CheckResult res = exact_result(
              !bad.has_value(),
              "exact product of the closed-form deformed inverse with the entrywise "
              "quantum-integer matrix [B_ij] at q^" +
                  std::to_string(k),
              bad ? std::get<2>(*bad).str() : "", bad ? std::get<3>(*bad).str() : "",
              bad ? entry_name(std::get<0>(*bad), std::get<1>(*bad)) : "");
          res.points = static_cast<long long>(n) * n;
          return res;
        }));
  }
  return rep;
}

}  // namespace qca
