#pragma once

#include <initializer_list>

#include <gtest/gtest.h>

#include "kreinkit/kreinkit.hpp"

namespace kk = kreinkit;

inline kk::DenseMatrix M(std::initializer_list<std::initializer_list<double>> rows) {
  kk::Index r = static_cast<kk::Index>(rows.size());
  kk::Index c = r ? static_cast<kk::Index>(rows.begin()->size()) : 0;
  kk::DenseMatrix m(r, c);
  kk::Index i = 0;
  for (const auto& row : rows) {
    kk::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline kk::SymmetricMatrix S(std::initializer_list<std::initializer_list<double>> rows) {
  return kk::SymmetricMatrix(M(rows));
}

inline kk::SymmetricMatrix D(std::initializer_list<double> d) {
  kk::Vector v(static_cast<kk::Index>(d.size()));
  kk::Index i = 0;
  for (double x : d) v(i++) = x;
  return kk::SymmetricMatrix::diagonal(v);
}

inline kk::JSpace J(std::initializer_list<double> d) { return kk::JSpace(D(d)); }

inline ::testing::AssertionResult near(const kk::DenseMatrix& a, const kk::DenseMatrix& b, double tol = 1e-12) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return ::testing::AssertionFailure() << "shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
                                         << b.cols();
  double d = a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0;
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max deviation " << d << "\n" << a << "\nvs\n" << b;
}

inline kk::Inertia I4(kk::Index p, kk::Index m, kk::Index z, kk::Index inf) {
  kk::Inertia i;
  i.n_plus = p;
  i.n_minus = m;
  i.n_zero = z;
  i.n_inf = inf;
  return i;
}
