#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbitrace/oracle.hpp"

namespace orbitrace {

/// Element of the integral group ring: normalized word -> nonzero coefficient.
class GroupRingElement {
 public:
  explicit GroupRingElement(OraclePtr oracle);

  static GroupRingElement zero(OraclePtr oracle) { return GroupRingElement(std::move(oracle)); }
  static GroupRingElement one(OraclePtr oracle);
  static GroupRingElement monomial(OraclePtr oracle, const Word& w, const Integer& coeff = 1);

  const OraclePtr& oracle() const { return oracle_; }
  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Word& w) const;

  /// Adds c*w, normalizing w.
  void add(const Word& w, const Integer& c);

  GroupRingElement operator+(const GroupRingElement& other) const;
  GroupRingElement operator-(const GroupRingElement& other) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& other) const;
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator*(const Integer& k, const GroupRingElement& a);

  /// Right multiplication by a group element.
  GroupRingElement times_word(const Word& w) const;
  /// Image under the involution sum n g -> sum n g^-1.
  GroupRingElement conjugate() const;

  bool operator==(const GroupRingElement& other) const;
  std::string to_string() const;

 private:
  void check(const GroupRingElement& other) const;

  OraclePtr oracle_;
  std::map<Word, Integer> terms_;
};

Integer augment(const GroupRingElement& a);
AbelianElement abelianize_A(const GroupRingElement& a);

/// 1 + x + ... + x^(m-1) for m > 0, 0 for m = 0, -(x^-1 + ... + x^m) for m < 0.
GroupRingElement x_bracket(const OraclePtr& oracle, const Word& x, std::int64_t m);

/// Dense matrix over the group ring. Column j holds the image of basis vector j.
class GroupRingMatrix {
 public:
  GroupRingMatrix(OraclePtr oracle, std::size_t rows, std::size_t cols);

  static GroupRingMatrix identity(OraclePtr oracle, std::size_t n);
  static GroupRingMatrix diagonal(const std::vector<GroupRingElement>& entries);

  const OraclePtr& oracle() const { return oracle_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GroupRingElement& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const GroupRingElement& operator()(std::size_t i, std::size_t j) const
  {
    return data_.at(i * cols_ + j);
  }

  GroupRingMatrix operator+(const GroupRingMatrix& other) const;
  GroupRingMatrix operator-(const GroupRingMatrix& other) const;
  GroupRingMatrix operator*(const GroupRingMatrix& other) const;
  friend GroupRingMatrix operator*(const Integer& k, const GroupRingMatrix& m);
  /// Entrywise right multiplication by a group ring element.
  GroupRingMatrix times_right(const GroupRingElement& r) const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  GroupRingMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const GroupRingMatrix& b);
  /// Rows and columns selected by index lists.
  GroupRingMatrix select(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;

  bool is_zero() const;
  bool operator==(const GroupRingMatrix& other) const;
  std::string to_string() const;

 private:
  void check_same_shape(const GroupRingMatrix& other) const;

  OraclePtr oracle_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GroupRingElement> data_;
};

/// sum_ij A_ij * B_ji
GroupRingElement mat_trace_product(const GroupRingMatrix& A, const GroupRingMatrix& B);

}  // namespace orbitrace
