#include "og6/normal_form.hpp"

#include <stdexcept>

namespace og6 {
namespace {

void swap_rows(IntMatrix& m, Index i, Index j) {
  if (i != j) m.row(i).swap(m.row(j));
}
void swap_cols(IntMatrix& m, Index i, Index j) {
  if (i != j) m.col(i).swap(m.col(j));
}
// row_i += c * row_j
void add_row(IntMatrix& m, Index i, Index j, const Integer& c) {
  for (Index k = 0; k < m.cols(); ++k) m(i, k) += c * m(j, k);
}
void add_col(IntMatrix& m, Index i, Index j, const Integer& c) {
  for (Index k = 0; k < m.rows(); ++k) m(k, i) += c * m(k, j);
}

// Least |entry| in the block [t.., t..]; ties go to the leftmost column,
// then the topmost row.
bool find_pivot(const IntMatrix& d, Index t, Index& pr, Index& pc) {
  bool found = false;
  Integer best;
  for (Index j = t; j < d.cols(); ++j)
    for (Index i = t; i < d.rows(); ++i) {
      if (d(i, j) == 0) continue;
      Integer a = abs_value(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  IntMatrix d = a;
  IntMatrix left = IntMatrix::Identity(m, m);
  IntMatrix right = IntMatrix::Identity(n, n);
  SmithForm out;

  for (Index t = 0; t < std::min(m, n); ++t) {
    Index pr = 0, pc = 0;
    if (!find_pivot(d, t, pr, pc)) break;
    swap_rows(d, t, pr);
    swap_rows(left, t, pr);
    swap_cols(d, t, pc);
    swap_cols(right, t, pc);

    for (;;) {
      bool changed = false;
      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = floor_div(d(i, t), d(t, t));
        add_row(d, i, t, -q);
        add_row(left, i, t, -q);
        if (d(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(left, t, i);
          changed = true;
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = floor_div(d(t, j), d(t, t));
        add_col(d, j, t, -q);
        add_col(right, j, t, -q);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(right, t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // Row and column t are clear; enforce divisibility of the rest.
      bool fixed = false;
      for (Index i = t + 1; i < m && !fixed; ++i)
        for (Index j = t + 1; j < n && !fixed; ++j)
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, Integer(1));
            add_row(left, t, i, Integer(1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.row(t) *= Integer(-1);
      left.row(t) *= Integer(-1);
    }
    out.diagonal.push_back(d(t, t));
    out.rank = t + 1;
  }
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Index n = a.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = a;
  Integer sign(1);
  Integer prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix m = a;
  const Index n = m.rows();
  Rational det(1);
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      m.row(k).swap(m.row(p));
      det = -det;
    }
    det *= m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational c = m(i, k) / m(k, k);
      for (Index j = k; j < n; ++j) m(i, j) -= c * m(k, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Index n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    m.row(k).swap(m.row(p));
    inv.row(k).swap(inv.row(p));
    Rational pivot = m(k, k);
    m.row(k) /= pivot;
    inv.row(k) /= pivot;
    for (Index i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rational c = m(i, k);
      m.row(i) -= c * m.row(k);
      inv.row(i) -= c * inv.row(k);
    }
  }
  return inv;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  return s.right.rightCols(a.cols() - s.rank);
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  IntMatrix transformed = a * s.right;
  return transformed.leftCols(s.rank);
}

Index rank_of(const RatMatrix& a) {
  RatMatrix m = a;
  Index rank = 0;
  for (Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Index p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(rank).swap(m.row(p));
    for (Index i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(rank, c);
      m.row(i) -= f * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

Diagonalization diagonalize(const RatMatrix& gram, const std::vector<Index>& pivot_order) {
  const Index n = gram.rows();
  std::vector<Index> order = pivot_order;
  if (order.empty())
    for (Index i = 0; i < n; ++i) order.push_back(i);
  if (static_cast<Index>(order.size()) != n) throw std::invalid_argument("pivot order has wrong length");

  RatMatrix s = gram;
  RatMatrix basis = RatMatrix::Identity(n, n);
  // column j of basis <- column j - c * column i, with the congruence on s
  auto combine = [&](Index j, Index i, const Rational& c) {
    basis.col(j) -= c * basis.col(i);
    s.col(j) -= c * s.col(i);
    s.row(j) -= c * s.row(i);
  };

  std::vector<Index> remaining = order;
  Diagonalization out;
  RatMatrix ordered(n, 0);
  while (!remaining.empty()) {
    Index pos = -1;
    for (Index k = 0; k < static_cast<Index>(remaining.size()); ++k)
      if (s(remaining[k], remaining[k]) != 0) {
        pos = k;
        break;
      }
    if (pos < 0) {
      // every remaining diagonal entry vanishes; create one from an off-diagonal pair
      bool made = false;
      for (Index k = 0; k < static_cast<Index>(remaining.size()) && !made; ++k)
        for (Index l = 0; l < static_cast<Index>(remaining.size()) && !made; ++l)
          if (k != l && s(remaining[k], remaining[l]) != 0) {
            combine(remaining[k], remaining[l], Rational(-1));
            pos = k;
            made = true;
          }
      if (!made) {
        for (Index r : remaining) {
          ordered.conservativeResize(n, ordered.cols() + 1);
          ordered.col(ordered.cols() - 1) = basis.col(r);
          out.diagonal.push_back(Rational(0));
        }
        break;
      }
    }
    Index i = remaining[pos];
    Rational pivot = s(i, i);
    remaining.erase(remaining.begin() + pos);
    for (Index j : remaining)
      if (s(i, j) != 0) combine(j, i, s(i, j) / pivot);
    ordered.conservativeResize(n, ordered.cols() + 1);
    ordered.col(ordered.cols() - 1) = basis.col(i);
    out.diagonal.push_back(pivot);
  }
  out.basis = ordered;
  return out;
}

Signature signature_of(const RatMatrix& gram) {
  Signature sig;
  for (const Rational& d : diagonalize(gram).diagonal) {
    if (d > 0) ++sig.positive;
    else if (d < 0) ++sig.negative;
    else ++sig.zero;
  }
  return sig;
}

}  // namespace og6
