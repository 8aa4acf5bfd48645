#pragma once

// Small exact linear algebra over Q and Z: dense, row-major, sizes up to 16.

#include <optional>
#include <vector>

#include "octavia/rational.hpp"

namespace octavia::linalg {

using QMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<int64_t>>;

QMatrix to_q(const ZMatrix& m);
QMatrix identity(int n);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QMatrix transpose(const QMatrix& a);
Rational determinant(QMatrix a);
/// Inverse of a square matrix; nullopt when singular.
std::optional<QMatrix> inverse(QMatrix a);
std::vector<Rational> apply(const QMatrix& a, const std::vector<Rational>& x);

/// Row-style Hermite normal form: a basis (upper triangular, positive pivots) of the
/// Z-span of the given rows. Zero rows are dropped.
ZMatrix hermite_rows(ZMatrix rows);

}  // namespace octavia::linalg
