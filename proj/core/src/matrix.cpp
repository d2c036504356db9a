#include "rdlab/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rdlab {

Mat Mat::identity(FieldPtr f, uint32_t n) {
  Mat m(std::move(f), n, n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldPtr f,
                   const std::vector<std::vector<uint32_t>>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  Mat m(std::move(f), uint32_t(rows.size()), uint32_t(rows[0].size()));
  for (uint32_t i = 0; i < m.rows_; ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("ragged matrix rows");
    for (uint32_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || field_.get() != o.field_.get())
    throw std::invalid_argument("matrix product shape/field mismatch");
  const Field& F = *field_;
  Mat out(field_, rows_, o.cols_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t k = 0; k < cols_; ++k) {
      uint32_t aik = at(i, k);
      if (!aik) continue;
      for (uint32_t j = 0; j < o.cols_; ++j) {
        uint32_t v = F.mul(aik, o.at(k, j));
        if (v) out.at(i, j) = F.add(out.at(i, j), v);
      }
    }
  return out;
}

std::vector<uint32_t> Mat::apply(const std::vector<uint32_t>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: arity");
  const Field& F = *field_;
  std::vector<uint32_t> y(rows_, 0);
  for (uint32_t i = 0; i < rows_; ++i) {
    uint32_t acc = 0;
    for (uint32_t j = 0; j < cols_; ++j) {
      uint32_t v = F.mul(at(i, j), x[j]);
      if (v) acc = F.add(acc, v);
    }
    y[i] = acc;
  }
  return y;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Mat Mat::conj_transpose() const {
  const Field& F = *field_;
  Mat out(field_, cols_, rows_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) out.at(j, i) = F.conj(at(i, j));
  return out;
}

bool Mat::lex_less(const Mat& o) const { return a_ < o.a_; }

namespace {
// row-echelon elimination in place; returns rank. cols limited to `cols`.
uint32_t eliminate(const Field& F, std::vector<std::vector<uint32_t>>& m,
                   uint32_t cols, std::vector<uint32_t>* pivots) {
  uint32_t rr = 0;
  for (uint32_t c = 0; c < cols && rr < m.size(); ++c) {
    uint32_t piv = UINT32_MAX;
    for (uint32_t i = rr; i < m.size(); ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv == UINT32_MAX) continue;
    std::swap(m[rr], m[piv]);
    uint32_t inv = F.inv(m[rr][c]);
    for (uint32_t j = 0; j < m[rr].size(); ++j)
      m[rr][j] = F.mul(m[rr][j], inv);
    for (uint32_t i = 0; i < m.size(); ++i) {
      if (i == rr || !m[i][c]) continue;
      uint32_t f = m[i][c];
      for (uint32_t j = 0; j < m[i].size(); ++j)
        m[i][j] = F.sub(m[i][j], F.mul(f, m[rr][j]));
    }
    if (pivots) pivots->push_back(c);
    ++rr;
  }
  return rr;
}
}  // namespace

uint32_t Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  const Field& F = *field_;
  std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  uint32_t det = 1;
  for (uint32_t c = 0; c < cols_; ++c) {
    uint32_t piv = UINT32_MAX;
    for (uint32_t i = c; i < rows_; ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv == UINT32_MAX) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = F.neg(det);
    }
    det = F.mul(det, m[c][c]);
    uint32_t inv = F.inv(m[c][c]);
    for (uint32_t i = c + 1; i < rows_; ++i) {
      if (!m[i][c]) continue;
      uint32_t f = F.mul(m[i][c], inv);
      for (uint32_t j = c; j < cols_; ++j)
        m[i][j] = F.sub(m[i][j], F.mul(f, m[c][j]));
    }
  }
  return det;
}

uint32_t Mat::rank() const {
  std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  return eliminate(*field_, m, cols_, nullptr);
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
  std::vector<std::vector<uint32_t>> m(rows_,
                                       std::vector<uint32_t>(2 * cols_, 0));
  for (uint32_t i = 0; i < rows_; ++i) {
    for (uint32_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
    m[i][cols_ + i] = 1;
  }
  if (eliminate(*field_, m, cols_, nullptr) != rows_) return std::nullopt;
  Mat out(field_, rows_, cols_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) out.at(i, j) = m[i][cols_ + j];
  return out;
}

std::vector<std::vector<uint32_t>> Mat::kernel_basis() const {
  std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  std::vector<uint32_t> pivots;
  eliminate(*field_, m, cols_, &pivots);
  const Field& F = *field_;
  std::vector<bool> is_pivot(cols_, false);
  for (uint32_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (uint32_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[fc] = 1;
    for (uint32_t rr = 0; rr < pivots.size(); ++rr)
      v[pivots[rr]] = F.neg(m[rr][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Mat::render() const {
  std::ostringstream os;
  os << '[';
  for (uint32_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (uint32_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << field_->render(at(i, j));
    }
  }
  os << ']';
  return os.str();
}

Form Form::standard_symplectic(FieldPtr f, uint32_t m) {
  Mat g(f, 2 * m, 2 * m);
  for (uint32_t i = 0; i < m; ++i) {
    g.at(2 * i, 2 * i + 1) = 1;
    g.at(2 * i + 1, 2 * i) = f->neg(1);
  }
  return Form{FormKind::symplectic, std::move(g)};
}

Form Form::standard_hermitian(FieldPtr fq2, uint32_t n) {
  if (!fq2->has_conj())
    throw std::invalid_argument("hermitian form needs a quadratic extension");
  return Form{FormKind::hermitian, Mat::identity(std::move(fq2), n)};
}

uint32_t Form::pair(const std::vector<uint32_t>& x,
                    const std::vector<uint32_t>& y) const {
  const Field& F = gram.field();
  std::vector<uint32_t> ys = y;
  if (kind == FormKind::hermitian)
    for (auto& v : ys) v = F.conj(v);
  // x^T G ybar (hermitian) or x^T G y (symplectic)
  uint32_t acc = 0;
  for (uint32_t i = 0; i < gram.rows(); ++i) {
    if (!x[i]) continue;
    uint32_t row = 0;
    for (uint32_t j = 0; j < gram.cols(); ++j)
      row = F.add(row, F.mul(gram.at(i, j), ys[j]));
    acc = F.add(acc, F.mul(x[i], row));
  }
  return acc;
}

bool preserves_form(const Mat& g, const Form& form) {
  const Mat& G = form.gram;
  Mat lhs = (form.kind == FormKind::hermitian ? g.conj_transpose()
                                              : g.transpose()) *
            G * g;
  return lhs == G;
}

}  // namespace rdlab
