#include "quiverhh/smith.hpp"

#include <algorithm>
#include <stdexcept>

#include "quiverhh/errors.hpp"

namespace quiverhh {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss
  IntMatrix a = *this;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(s, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

namespace {

struct Reducer {
  IntMatrix d, u, v, vinv;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
    for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv(a, c), vinv(b, c));
  }
  // row_b -= q * row_a
  void row_sub(std::size_t b, std::size_t a, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d(b, c) -= q * d(a, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(b, c) -= q * u(a, c);
  }
  // col_b -= q * col_a
  void col_sub(std::size_t b, std::size_t a, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, b) -= q * d(r, a);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, b) -= q * v(r, a);
    for (std::size_t c = 0; c < vinv.cols(); ++c) vinv(a, c) += q * vinv(b, c);
  }
  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(a, c) = -d(a, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(a, c) = -u(a, c);
  }
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Reducer st{m, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(cols)};
  IntMatrix& d = st.d;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry in the trailing block
      bool found = false;
      std::size_t pr = t, pc = t;
      mpz_class best;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (d(r, c) == 0) continue;
          mpz_class a = abs(d(r, c));
          if (!found || a < best) {
            found = true;
            best = a;
            pr = r;
            pc = c;
          }
        }
      }
      if (!found) goto done;
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        st.row_sub(r, t, floor_div(d(r, t), d(t, t)));
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        st.col_sub(c, t, floor_div(d(t, c), d(t, t)));
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pull an offending row into row t and go again
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            st.row_sub(t, r, -1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d(t, t) < 0) st.negate_row(t);
  }
done:
  SmithForm out{st.d, st.u, st.v, st.vinv, t};
  if (!(out.left * m * out.right == out.diagonal) ||
      !(out.right * out.right_inverse == IntMatrix::identity(cols))) {
    throw InvariantViolation("Smith normal form identity check failed");
  }
  return out;
}

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<mpz_class> torsion) : free_rank_(free_rank) {
  std::vector<mpz_class> finite;
  for (auto& x : torsion) {
    mpz_class a = abs(x);
    if (a == 0) {
      ++free_rank_;
    } else if (a != 1) {
      finite.push_back(a);
    }
  }
  if (finite.empty()) return;
  // invariant factors of a diagonal matrix
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
  for (auto& f : smith_normal_form(diag).invariant_factors()) {
    if (f != 1) torsion_.push_back(f);
  }
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ == 1) out = "Z";
  if (free_rank_ > 1) out = "Z^" + std::to_string(free_rank_);
  for (const auto& t : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<mpz_class> torsion = a.torsion();
  torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
  return AbelianGroup(a.free_rank() + b.free_rank(), std::move(torsion));
}

AbelianGroup cokernel_group(std::size_t ambient_rank, const IntMatrix& image_columns) {
  if (image_columns.cols() == 0) return AbelianGroup(ambient_rank, {});
  if (image_columns.rows() != ambient_rank) throw std::invalid_argument("image has wrong ambient rank");
  SmithForm s = smith_normal_form(image_columns);
  return AbelianGroup(ambient_rank - s.rank, s.invariant_factors());
}

std::size_t dual_dimension(const AbelianGroup& g, const Field& k) {
  std::size_t dim = g.free_rank();
  if (k.is_rationals()) return dim;
  for (const auto& t : g.torsion()) {
    if (mpz_divisible_ui_p(t.get_mpz_t(), k.characteristic())) ++dim;
  }
  return dim;
}

}  // namespace quiverhh
