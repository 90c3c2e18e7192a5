#ifndef BRAIDREP_POLYMATRIX_HPP
#define BRAIDREP_POLYMATRIX_HPP

#include "braidrep/laurent.hpp"

namespace braidrep {

// A dense matrix with Laurent-polynomial entries over a common variable
// set. All arithmetic is exact.
class PolyMatrix {
public:
  PolyMatrix(int rows, int cols, VarSetPtr vars);
  static PolyMatrix identity(int size, VarSetPtr vars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const VarSetPtr& vars() const { return vars_; }

  const LaurentPoly& at(int r, int c) const;
  LaurentPoly& at(int r, int c);

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix scaled(const LaurentPoly& c) const;

  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;

  PolyMatrix substituted(std::size_t var_index, const Rational& value) const;
  PolyMatrix promoted(const VarSetPtr& bigger) const;

  // Exact determinant (column-subset expansion; fine for the desk-scale
  // dimensions this library works at).
  LaurentPoly det() const;
  // det(xI - M) as a polynomial over vars + {x_name}.
  LaurentPoly char_poly(const std::string& x_name = "x") const;
  // Adjugate inverse; requires the determinant to be a unit of the Laurent
  // ring. Dimension-capped because the cofactor expansion is exponential.
  PolyMatrix inverse_unit_det() const;

private:
  int rows_, cols_;
  VarSetPtr vars_;
  std::vector<LaurentPoly> entries_;

  LaurentPoly det_of(const std::vector<int>& row_ids,
                     const std::vector<int>& col_ids) const;
};

// Block assembly: result is (rows*dim) x (cols*dim) built from equally
// sized blocks indexed (r, c).
PolyMatrix assemble_blocks(int rows, int cols,
                           const std::vector<PolyMatrix>& blocks);

}  // namespace braidrep

#endif
