#ifndef RDLAB_MATRIX_HPP
#define RDLAB_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdlab/gf.hpp"

namespace rdlab {

/* Dense matrix over a finite field; entries are element indices. */
class Mat {
public:
  Mat() = default;
  Mat(FieldPtr f, uint32_t rows, uint32_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols),
        a_(size_t(rows) * cols, 0) {}

  static Mat identity(FieldPtr f, uint32_t n);
  static Mat from_rows(FieldPtr f,
                       const std::vector<std::vector<uint32_t>>& rows);

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }

  uint32_t at(uint32_t i, uint32_t j) const { return a_[size_t(i) * cols_ + j]; }
  uint32_t& at(uint32_t i, uint32_t j) { return a_[size_t(i) * cols_ + j]; }
  const std::vector<uint32_t>& data() const { return a_; }

  Mat operator*(const Mat& o) const;
  std::vector<uint32_t> apply(const std::vector<uint32_t>& x) const;
  Mat transpose() const;
  Mat conj_transpose() const;  // entrywise conj, then transpose
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  // entry-sequence lexicographic order (row-major); used for canonical
  // coset representatives
  bool lex_less(const Mat& o) const;

  uint32_t det() const;           // square only
  uint32_t rank() const;
  std::optional<Mat> inverse() const;
  // basis of the right kernel, one column vector per basis element
  std::vector<std::vector<uint32_t>> kernel_basis() const;

  std::string render() const;

private:
  FieldPtr field_;
  uint32_t rows_ = 0, cols_ = 0;
  std::vector<uint32_t> a_;
};

enum class FormKind { symplectic, hermitian };

/*
 * Bilinear or sesquilinear form descriptor with an explicit Gram matrix.
 * The standard symplectic Gram is block-diagonal [[0,1],[-1,0]]; the
 * standard hermitian Gram is the identity over a field with conj().
 */
struct Form {
  FormKind kind;
  Mat gram;

  static Form standard_symplectic(FieldPtr f, uint32_t m);
  static Form standard_hermitian(FieldPtr fq2, uint32_t n);

  // omega(x, y) or h(x, y)
  uint32_t pair(const std::vector<uint32_t>& x,
                const std::vector<uint32_t>& y) const;
};

// exact test: g^T J g = J (symplectic) / conj(g)^T G g = G (hermitian)
bool preserves_form(const Mat& g, const Form& form);

}  // namespace rdlab

#endif
