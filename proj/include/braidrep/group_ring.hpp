#ifndef BRAIDREP_GROUP_RING_HPP
#define BRAIDREP_GROUP_RING_HPP

#include <map>

#include "braidrep/laurent.hpp"
#include "braidrep/semidirect.hpp"

namespace braidrep {

// An element of Z[vars][F_n |x B_n]: a finite sum of Laurent-polynomial
// coefficients on canonical group elements. Keys are canonicalized on
// every operation, so equality is structural.
class GroupRingElement {
public:
  GroupRingElement(int n, VarSetPtr vars);

  static GroupRingElement zero(int n, VarSetPtr vars);
  static GroupRingElement one(int n, VarSetPtr vars);
  static GroupRingElement from_element(const SemidirectElement& g, VarSetPtr vars);
  static GroupRingElement from_free(const FreeWord& w, VarSetPtr vars);
  static GroupRingElement from_braid(const BraidWord& b, VarSetPtr vars);

  int n() const { return n_; }
  const VarSetPtr& vars() const { return vars_; }
  const std::map<SemidirectElement, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement scaled(const LaurentPoly& c) const;

  bool operator==(const GroupRingElement& o) const;
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  // Entrywise Artin action on the free parts; requires every term to have
  // a trivial braid part (the Z[F_n] subring), where conjugation by a braid
  // stays inside Z[F_n].
  GroupRingElement acted_by(const BraidWord& b) const;

  void add_term(const SemidirectElement& g, const LaurentPoly& c);

private:
  int n_;
  VarSetPtr vars_;
  std::map<SemidirectElement, LaurentPoly> terms_;
};

// A dense matrix over the group ring. Products keep entry order (left
// factor's entries multiply on the left).
class GroupRingMatrix {
public:
  GroupRingMatrix(int rows, int cols, int n, VarSetPtr vars);
  static GroupRingMatrix identity(int size, int n, VarSetPtr vars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int n() const { return n_; }
  const VarSetPtr& vars() const { return vars_; }

  const GroupRingElement& at(int r, int c) const;
  GroupRingElement& at(int r, int c);

  GroupRingMatrix operator*(const GroupRingMatrix& o) const;
  GroupRingMatrix operator+(const GroupRingMatrix& o) const;
  GroupRingMatrix operator-(const GroupRingMatrix& o) const;
  // Every entry multiplied by x on the left / right.
  GroupRingMatrix scalar_lmul(const GroupRingElement& x) const;
  GroupRingMatrix scalar_rmul(const GroupRingElement& x) const;
  GroupRingMatrix acted_by(const BraidWord& b) const;

  bool operator==(const GroupRingMatrix& o) const;
  bool operator!=(const GroupRingMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

private:
  int rows_, cols_, n_;
  VarSetPtr vars_;
  std::vector<GroupRingElement> entries_;
};

}  // namespace braidrep

#endif
