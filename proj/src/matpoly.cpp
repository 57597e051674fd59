#include "mfkit/matpoly.hpp"

namespace mfkit {

PolyMat::PolyMat(std::size_t n, VarTablePtr table)
    : n_(n), table_(std::move(table)), entries_(n * n, Poly(table_)) {}

PolyMat::PolyMat(std::vector<std::vector<Poly>> rows) {
  n_ = rows.size();
  if (n_ == 0) throw Error("PolyMat: empty matrix");
  for (const auto& r : rows)
    if (r.size() != n_) throw Error("PolyMat: not square");
  table_ = rows[0][0].table();
  entries_.reserve(n_ * n_);
  for (auto& r : rows)
    for (auto& p : r) entries_.push_back(std::move(p));
}

PolyMat PolyMat::identity(std::size_t n, const VarTablePtr& table) {
  PolyMat m(n, table);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = Poly::constant(table, CycNum(1));
  return m;
}

PolyMat PolyMat::scalar(std::size_t n, const Poly& p) {
  PolyMat m(n, p.table());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
  return m;
}

PolyMat PolyMat::transpose() const {
  PolyMat m(n_, table_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
  return m;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.n_ != b.n_) throw Error("PolyMat: size mismatch");
  PolyMat m(a.n_, a.table_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      Poly s(a.table_);
      for (std::size_t k = 0; k < a.n_; ++k) s = s + a.at(i, k) * b.at(k, j);
      m.at(i, j) = std::move(s);
    }
  return m;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
  if (a.n_ != b.n_) throw Error("PolyMat: size mismatch");
  PolyMat m(a.n_, a.table_);
  for (std::size_t i = 0; i < a.n_ * a.n_; ++i) m.entries_[i] = a.entries_[i] + b.entries_[i];
  return m;
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) {
  if (a.n_ != b.n_) throw Error("PolyMat: size mismatch");
  PolyMat m(a.n_, a.table_);
  for (std::size_t i = 0; i < a.n_ * a.n_; ++i) m.entries_[i] = a.entries_[i] - b.entries_[i];
  return m;
}

Poly PolyMat::minor_det(std::size_t i, std::size_t j) const {
  std::vector<std::vector<Poly>> rows;
  for (std::size_t r = 0; r < n_; ++r) {
    if (r == i) continue;
    std::vector<Poly> row;
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == j) continue;
      row.push_back(at(r, c));
    }
    rows.push_back(std::move(row));
  }
  return PolyMat(std::move(rows)).det();
}

Poly PolyMat::det() const {
  if (n_ == 1) return at(0, 0);
  Poly d(table_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (at(0, j).is_zero()) continue;
    Poly cof = at(0, j) * minor_det(0, j);
    d = (j % 2 == 0) ? d + cof : d - cof;
  }
  return d;
}

PolyMat PolyMat::adjugate() const {
  PolyMat adj(n_, table_);
  if (n_ == 1) {
    adj.at(0, 0) = Poly::constant(table_, CycNum(1));
    return adj;
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Poly cof = minor_det(i, j);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = std::move(cof);
    }
  return adj;
}

std::vector<Poly> PolyMat::minors(std::size_t k) const {
  if (k == 0) return {Poly::constant(table_, CycNum(1))};
  if (k > n_) return {};
  std::vector<std::size_t> ridx(k), cidx(k);
  std::vector<Poly> out;
  // Iterate over increasing index subsets of rows and columns.
  auto next_subset = [this, k](std::vector<std::size_t>& s) {
    std::size_t i = k;
    while (i-- > 0) {
      if (s[i] + 1 <= n_ - (k - i)) {
        ++s[i];
        for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) ridx[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cidx[i] = i;
    do {
      std::vector<std::vector<Poly>> rows;
      for (std::size_t r : ridx) {
        std::vector<Poly> row;
        for (std::size_t c : cidx) row.push_back(at(r, c));
        rows.push_back(std::move(row));
      }
      out.push_back(PolyMat(std::move(rows)).det());
    } while (next_subset(cidx));
  } while (next_subset(ridx));
  return out;
}

Ideal fitting_ideal(const PolyMat& a, std::size_t t, MonomialOrder order) {
  if (t > a.size()) throw Error("fitting_ideal: index out of range");
  return Ideal(a.minors(a.size() - t), order);
}

MatrixFactorization make_mf(PolyMat phi, PolyMat psi, Poly f) {
  if (phi.size() != psi.size()) throw Error("make_mf: size mismatch");
  PolyMat expected = PolyMat::scalar(phi.size(), f);
  for (auto [name, prod] : {std::pair<const char*, PolyMat>{"phi*psi", phi * psi},
                            {"psi*phi", psi * phi}}) {
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = 0; j < phi.size(); ++j)
        if (prod.at(i, j) != expected.at(i, j))
          throw Error(std::string("make_mf: ") + name + " entry (" +
                      std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ") is not " + (i == j ? "f" : "0"));
  }
  return {std::move(phi), std::move(psi), std::move(f)};
}

int rank_of_mf(const MatrixFactorization& m) {
  Poly d = m.phi.det();
  if (d.is_zero()) throw Error("rank_of_mf: det(phi) = 0");
  int r = 0;
  for (;;) {
    auto q = d.exact_div(m.f);
    if (!q) break;
    d = *q;
    ++r;
  }
  return r;
}

MatrixFactorization tensor_1x1(const Poly& a1, const Poly& a2, const Poly& b1,
                               const Poly& b2) {
  Poly f = a1 * a2 + b1 * b2;
  if (f.is_zero()) throw Error("tensor_1x1: degenerate factorization");
  PolyMat phi({{a1, -b1}, {b2, a2}});
  PolyMat psi({{a2, b1}, {-b2, a1}});
  return make_mf(std::move(phi), std::move(psi), std::move(f));
}

PolyMat apply_elementary(const PolyMat& a, const ElementaryOp& op) {
  PolyMat m = a;
  std::size_t n = a.size();
  auto check = [n](std::size_t i) {
    if (i >= n) throw Error("apply_elementary: index out of range");
  };
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SwapRows>) {
          check(o.i), check(o.j);
          for (std::size_t c = 0; c < n; ++c) std::swap(m.at(o.i, c), m.at(o.j, c));
        } else if constexpr (std::is_same_v<T, SwapCols>) {
          check(o.i), check(o.j);
          for (std::size_t r = 0; r < n; ++r) std::swap(m.at(r, o.i), m.at(r, o.j));
        } else if constexpr (std::is_same_v<T, ScaleRow>) {
          check(o.i);
          if (o.c.is_zero()) throw Error("apply_elementary: zero scale");
          for (std::size_t c = 0; c < n; ++c) m.at(o.i, c) = o.c * m.at(o.i, c);
        } else if constexpr (std::is_same_v<T, ScaleCol>) {
          check(o.i);
          if (o.c.is_zero()) throw Error("apply_elementary: zero scale");
          for (std::size_t r = 0; r < n; ++r) m.at(r, o.i) = o.c * m.at(r, o.i);
        } else if constexpr (std::is_same_v<T, AddRowMultiple>) {
          check(o.src), check(o.dst);
          if (o.src == o.dst) throw Error("apply_elementary: src == dst");
          for (std::size_t c = 0; c < n; ++c)
            m.at(o.dst, c) = m.at(o.dst, c) + o.factor * m.at(o.src, c);
        } else if constexpr (std::is_same_v<T, AddColMultiple>) {
          check(o.src), check(o.dst);
          if (o.src == o.dst) throw Error("apply_elementary: src == dst");
          for (std::size_t r = 0; r < n; ++r)
            m.at(r, o.dst) = m.at(r, o.dst) + o.factor * m.at(r, o.src);
        }
      },
      op);
  return m;
}

}  // namespace mfkit
