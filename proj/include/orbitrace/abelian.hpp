#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbitrace/integer.hpp"

namespace orbitrace {

/// Dense integer matrix in row-major order.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  /// Determinant by fraction-free elimination; square matrices only.
  Integer determinant() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
};

/// Computes unimodular U, V with U*M*V = S diagonal, non-negative,
/// and each diagonal entry dividing the next. Throws ConsistencyError
/// if the self-check of the result fails.
SmithForm smith_normal_form(const IntMatrix& M);

/// Finitely generated abelian group Z^rank + sum Z/d_i with d_i >= 2, d_i | d_{i+1}.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  std::string to_string() const;

  bool operator==(const FgAbelianGroup&) const = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

class AbelianElement {
 public:
  AbelianElement() = default;
  /// Torsion coordinates are reduced into [0, d_i).
  AbelianElement(std::shared_ptr<const FgAbelianGroup> group, std::vector<Integer> free_part,
                 std::vector<Integer> torsion_part);

  static AbelianElement zero(std::shared_ptr<const FgAbelianGroup> group);

  const FgAbelianGroup& group() const { return *group_; }
  const std::shared_ptr<const FgAbelianGroup>& group_ptr() const { return group_; }
  const std::vector<Integer>& free_part() const { return free_; }
  const std::vector<Integer>& torsion_part() const { return torsion_; }

  bool is_zero() const;
  /// Order of the element; nullopt means infinite.
  std::optional<Integer> order() const;

  AbelianElement operator+(const AbelianElement& other) const;
  AbelianElement operator-(const AbelianElement& other) const;
  AbelianElement operator-() const;
  AbelianElement& operator+=(const AbelianElement& other);
  friend AbelianElement operator*(const Integer& k, const AbelianElement& a);

  bool operator==(const AbelianElement& other) const;
  std::string to_string() const;

 private:
  void check_same_group(const AbelianElement& other) const;

  std::shared_ptr<const FgAbelianGroup> group_;
  std::vector<Integer> free_;
  std::vector<Integer> torsion_;
};

/// Abelian group presented by generators and integer relation rows, with the
/// coordinate map from generators to the Smith-normal-form decomposition.
class AbelianPresentation {
 public:
  /// relations: each row has one entry per generator.
  AbelianPresentation(std::size_t generators, const std::vector<std::vector<Integer>>& relations);

  const std::shared_ptr<const FgAbelianGroup>& group() const { return group_; }
  std::size_t generator_count() const { return images_.size(); }
  const AbelianElement& image(std::size_t gen) const { return images_.at(gen); }
  /// Image of an integer combination of generators.
  AbelianElement evaluate(const std::vector<Integer>& exponents) const;
  /// |det| of the relation matrix when it is square, else nullopt.
  const std::optional<Integer>& determinant() const { return det_; }

 private:
  std::shared_ptr<const FgAbelianGroup> group_;
  std::vector<AbelianElement> images_;
  std::optional<Integer> det_;
};

}  // namespace orbitrace
