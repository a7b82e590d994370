#include "orbitrace/abelian.hpp"

#include <algorithm>
#include <utility>

#include "orbitrace/errors.hpp"

namespace orbitrace {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0))
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols)
{
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatch("relation row has wrong length");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
  if (cols_ != other.rows_)
    throw DimensionMismatch("integer matrix product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) += a * other(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k)
{
  if (k == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k)
{
  if (k == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r)
{
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

Integer IntMatrix::determinant() const
{
  if (rows_ != cols_)
    throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0)
    return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

bool is_diagonal_chain(const IntMatrix& S)
{
  const std::size_t n = std::min(S.rows(), S.cols());
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < S.cols(); ++j)
      if (i != j && S(i, j) != 0)
        return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (S(i, i) < 0)
      return false;
    if (i + 1 < n) {
      const Integer& a = S(i, i);
      const Integer& b = S(i + 1, i + 1);
      if (a == 0 ? b != 0 : b % a != 0)
        return false;
    }
  }
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M)
{
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  IntMatrix S = M;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the remaining block
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m)
        goto done;
      S.swap_rows(t, pi);
      U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = S(i, t) / S(t, t);
        S.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (S(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = S(t, j) / S(t, t);
        S.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (S(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m)
        break;
      S.add_row(t, bad, 1);
      U.add_row(t, bad, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
done:
  if (!(U * M * V == S) || !is_diagonal_chain(S))
    throw ConsistencyError("Smith normal form self-check failed");
  return {std::move(S), std::move(U), std::move(V)};
}

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion))
{
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw InvalidInput("torsion coefficient must be at least 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw InvalidInput("torsion coefficients must form a divisibility chain");
  }
}

std::string FgAbelianGroup::to_string() const
{
  if (trivial())
    return "0";
  std::string s;
  for (const auto& d : torsion_)
    s += (s.empty() ? "" : " + ") + std::string("Z/") + d.str();
  if (free_rank_ > 0)
    s += (s.empty() ? "" : " + ") + std::string("Z") +
         (free_rank_ > 1 ? "^" + std::to_string(free_rank_) : "");
  return s;
}

AbelianElement::AbelianElement(std::shared_ptr<const FgAbelianGroup> group,
                               std::vector<Integer> free_part, std::vector<Integer> torsion_part)
    : group_(std::move(group)), free_(std::move(free_part)), torsion_(std::move(torsion_part))
{
  if (!group_ || free_.size() != group_->free_rank() ||
      torsion_.size() != group_->torsion().size())
    throw DimensionMismatch("abelian element coordinates do not match group");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const Integer& d = group_->torsion()[i];
    torsion_[i] %= d;
    if (torsion_[i] < 0)
      torsion_[i] += d;
  }
}

AbelianElement AbelianElement::zero(std::shared_ptr<const FgAbelianGroup> group)
{
  const std::size_t r = group->free_rank();
  const std::size_t t = group->torsion().size();
  return AbelianElement(std::move(group), std::vector<Integer>(r, Integer(0)),
                        std::vector<Integer>(t, Integer(0)));
}

bool AbelianElement::is_zero() const
{
  for (const auto& x : free_)
    if (x != 0)
      return false;
  for (const auto& x : torsion_)
    if (x != 0)
      return false;
  return true;
}

std::optional<Integer> AbelianElement::order() const
{
  for (const auto& x : free_)
    if (x != 0)
      return std::nullopt;
  Integer ord = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const Integer& d = group_->torsion()[i];
    Integer k = d / gcd(d, torsion_[i]);
    ord = lcm(ord, k);
  }
  return ord;
}

void AbelianElement::check_same_group(const AbelianElement& other) const
{
  if (group_ != other.group_ && !(*group_ == *other.group_))
    throw OracleMismatch("abelian elements from different groups");
}

AbelianElement AbelianElement::operator+(const AbelianElement& other) const
{
  AbelianElement out = *this;
  out += other;
  return out;
}

AbelianElement& AbelianElement::operator+=(const AbelianElement& other)
{
  check_same_group(other);
  for (std::size_t i = 0; i < free_.size(); ++i)
    free_[i] += other.free_[i];
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    torsion_[i] += other.torsion_[i];
    if (torsion_[i] >= group_->torsion()[i])
      torsion_[i] -= group_->torsion()[i];
  }
  return *this;
}

AbelianElement AbelianElement::operator-() const { return Integer(-1) * *this; }

AbelianElement AbelianElement::operator-(const AbelianElement& other) const
{
  return *this + (-other);
}

AbelianElement operator*(const Integer& k, const AbelianElement& a)
{
  std::vector<Integer> f = a.free_;
  std::vector<Integer> t = a.torsion_;
  for (auto& x : f)
    x *= k;
  for (auto& x : t)
    x *= k;
  return AbelianElement(a.group_, std::move(f), std::move(t));
}

bool AbelianElement::operator==(const AbelianElement& other) const
{
  if (group_ != other.group_ && !(*group_ == *other.group_))
    return false;
  return free_ == other.free_ && torsion_ == other.torsion_;
}

std::string AbelianElement::to_string() const
{
  std::string s = "(";
  for (std::size_t i = 0; i < free_.size(); ++i)
    s += (i ? "," : "") + free_[i].str();
  s += "|";
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    s += (i ? "," : "") + torsion_[i].str();
  return s + ")";
}

AbelianPresentation::AbelianPresentation(std::size_t generators,
                                         const std::vector<std::vector<Integer>>& relations)
{
  IntMatrix R = IntMatrix::from_rows(relations, generators);
  if (R.rows() == R.cols())
    det_ = abs(R.determinant());
  SmithForm snf = smith_normal_form(R);

  // coordinate k of the new basis: diagonal entry d_k (0 beyond the relation count)
  std::vector<Integer> diag(generators, Integer(0));
  for (std::size_t k = 0; k < std::min(R.rows(), generators); ++k)
    diag[k] = snf.S(k, k);

  std::vector<std::size_t> torsion_idx, free_idx;
  std::vector<Integer> torsion;
  for (std::size_t k = 0; k < generators; ++k) {
    if (diag[k] == 0)
      free_idx.push_back(k);
    else if (diag[k] >= 2) {
      torsion_idx.push_back(k);
      torsion.push_back(diag[k]);
    }
  }
  group_ = std::make_shared<const FgAbelianGroup>(free_idx.size(), std::move(torsion));

  for (std::size_t g = 0; g < generators; ++g) {
    std::vector<Integer> f, t;
    for (auto k : free_idx)
      f.push_back(snf.V(g, k));
    for (auto k : torsion_idx)
      t.push_back(snf.V(g, k));
    images_.emplace_back(group_, std::move(f), std::move(t));
  }
}

AbelianElement AbelianPresentation::evaluate(const std::vector<Integer>& exponents) const
{
  AbelianElement out = AbelianElement::zero(group_);
  for (std::size_t g = 0; g < exponents.size() && g < images_.size(); ++g)
    if (exponents[g] != 0)
      out += exponents[g] * images_[g];
  return out;
}

}  // namespace orbitrace
