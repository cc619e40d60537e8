#pragma once

#include <map>
#include <vector>

#include "nilsymp/linalg.hpp"
#include "nilsymp/nilalgebra.hpp"

namespace nilsymp {

/// Exterior p-form on the dual basis: canonical (strictly increasing) index
/// tuples mapped to nonzero rational coefficients.
class ExtForm {
 public:
  ExtForm() = default;
  ExtForm(int dim, int degree) : dim_(dim), degree_(degree) {}

  static ExtForm monomial(int dim, std::vector<int> indices, Rational c);
  static ExtForm from_pairs(int dim, const std::vector<std::tuple<int, int, Rational>>& terms);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::vector<int>, Rational>& coeffs() const { return coeffs_; }

  void add_term(std::vector<int> indices, const Rational& c);  // sorts, tracks sign
  ExtForm& operator+=(const ExtForm& o);
  ExtForm operator*(const Rational& c) const;
  ExtForm wedge(const ExtForm& o) const;

  /// Value on two basis vectors (degree 2 only).
  Rational eval(int i, int j) const;
  /// Skew coefficient matrix of a 2-form.
  QMatrix gram(int n) const;

  /// Coordinates in the lex monomial basis of Lambda^degree.
  QVec coordinates() const;
  static ExtForm from_coordinates(int dim, int degree, const QVec& v);

  bool operator==(const ExtForm&) const = default;

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<std::vector<int>, Rational> coeffs_;
};

/// Lex rank/unrank of strictly increasing index tuples.
std::size_t monomial_count(int dim, int p);
std::size_t monomial_rank(int dim, const std::vector<int>& t);
std::vector<int> monomial_unrank(int dim, int p, std::size_t rank);

/// omega^m by repeated wedge; exact, intended for small dimensions.
ExtForm wedge_power(const ExtForm& omega, int m);

}  // namespace nilsymp
