#include "orbitrace/groupring.hpp"

#include "orbitrace/errors.hpp"

namespace orbitrace {

GroupRingElement::GroupRingElement(OraclePtr oracle) : oracle_(std::move(oracle))
{
  if (!oracle_)
    throw InvalidInput("group ring element without oracle");
}

GroupRingElement GroupRingElement::one(OraclePtr oracle)
{
  return monomial(std::move(oracle), Word(), 1);
}

GroupRingElement GroupRingElement::monomial(OraclePtr oracle, const Word& w, const Integer& coeff)
{
  GroupRingElement out(std::move(oracle));
  out.add(w, coeff);
  return out;
}

Integer GroupRingElement::coefficient(const Word& w) const
{
  auto it = terms_.find(oracle_->normalize(w));
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add(const Word& w, const Integer& c)
{
  if (c == 0)
    return;
  const Word n = oracle_->normalize(w);
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void GroupRingElement::check(const GroupRingElement& other) const
{
  if (!oracle_->same_group(*other.oracle_))
    throw OracleMismatch("group ring elements over different oracles");
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other)
{
  check(other);
  for (const auto& [w, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other)
{
  return *this += -other;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& other) const
{
  GroupRingElement out = *this;
  out += other;
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& other) const
{
  GroupRingElement out = *this;
  out += -other;
  return out;
}

GroupRingElement GroupRingElement::operator-() const { return Integer(-1) * *this; }

GroupRingElement operator*(const Integer& k, const GroupRingElement& a)
{
  GroupRingElement out(a.oracle_);
  if (k == 0)
    return out;
  for (const auto& [w, c] : a.terms_)
    out.terms_.emplace(w, k * c);
  return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& other) const
{
  check(other);
  GroupRingElement out(oracle_);
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : other.terms_)
      out.add(u * v, a * b);
  return out;
}

GroupRingElement GroupRingElement::times_word(const Word& w) const
{
  GroupRingElement out(oracle_);
  for (const auto& [u, a] : terms_)
    out.add(u * w, a);
  return out;
}

GroupRingElement GroupRingElement::conjugate() const
{
  GroupRingElement out(oracle_);
  for (const auto& [u, a] : terms_)
    out.add(u.inverse(), a);
  return out;
}

bool GroupRingElement::operator==(const GroupRingElement& other) const
{
  return oracle_ == other.oracle_ && terms_ == other.terms_;
}

std::string GroupRingElement::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const std::string word = w.to_string(oracle_->generator_names());
    if (a == 1)
      s += word;
    else
      s += a.str() + (w.empty() ? "" : "*" + word);
  }
  return s;
}

Integer augment(const GroupRingElement& a)
{
  Integer s = 0;
  for (const auto& [w, c] : a.terms())
    s += c;
  return s;
}

AbelianElement abelianize_A(const GroupRingElement& a)
{
  AbelianElement out = AbelianElement::zero(a.oracle()->h1());
  for (const auto& [w, c] : a.terms())
    out += c * a.oracle()->abelianize(w);
  return out;
}

GroupRingElement x_bracket(const OraclePtr& oracle, const Word& x, std::int64_t m)
{
  GroupRingElement out(oracle);
  if (m > 0)
    for (std::int64_t k = 0; k < m; ++k)
      out.add(x.pow(k), 1);
  else
    for (std::int64_t k = 1; k <= -m; ++k)
      out.add(x.pow(-k), -1);
  return out;
}

GroupRingMatrix::GroupRingMatrix(OraclePtr oracle, std::size_t rows, std::size_t cols)
    : oracle_(std::move(oracle)), rows_(rows), cols_(cols),
      data_(rows * cols, GroupRingElement(oracle_))
{
}

GroupRingMatrix GroupRingMatrix::identity(OraclePtr oracle, std::size_t n)
{
  GroupRingMatrix m(oracle, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = GroupRingElement::one(oracle);
  return m;
}

GroupRingMatrix GroupRingMatrix::diagonal(const std::vector<GroupRingElement>& entries)
{
  if (entries.empty())
    throw InvalidInput("diagonal matrix needs at least one entry");
  GroupRingMatrix m(entries.front().oracle(), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = entries[i];
  return m;
}

void GroupRingMatrix::check_same_shape(const GroupRingMatrix& other) const
{
  if (!oracle_->same_group(*other.oracle_))
    throw OracleMismatch("matrices over different oracles");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix shapes differ");
}

GroupRingMatrix GroupRingMatrix::operator+(const GroupRingMatrix& other) const
{
  check_same_shape(other);
  GroupRingMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] += other.data_[i];
  return out;
}

GroupRingMatrix GroupRingMatrix::operator-(const GroupRingMatrix& other) const
{
  return *this + Integer(-1) * other;
}

GroupRingMatrix operator*(const Integer& k, const GroupRingMatrix& m)
{
  GroupRingMatrix out = m;
  for (auto& e : out.data_)
    e = k * e;
  return out;
}

GroupRingMatrix GroupRingMatrix::operator*(const GroupRingMatrix& other) const
{
  if (!oracle_->same_group(*other.oracle_))
    throw OracleMismatch("matrices over different oracles");
  if (cols_ != other.rows_)
    throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " by " + std::to_string(other.rows_) + "x" +
                            std::to_string(other.cols_));
  GroupRingMatrix out(oracle_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        if (!other(k, j).is_zero())
          out(i, j) += a * other(k, j);
    }
  return out;
}

GroupRingMatrix GroupRingMatrix::times_right(const GroupRingElement& r) const
{
  GroupRingMatrix out = *this;
  for (auto& e : out.data_)
    e = e * r;
  return out;
}

GroupRingMatrix GroupRingMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                       std::size_t nc) const
{
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw DimensionMismatch("block out of range");
  GroupRingMatrix out(oracle_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void GroupRingMatrix::set_block(std::size_t r0, std::size_t c0, const GroupRingMatrix& b)
{
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw DimensionMismatch("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      (*this)(r0 + i, c0 + j) = b(i, j);
}

GroupRingMatrix GroupRingMatrix::select(const std::vector<std::size_t>& rows,
                                        const std::vector<std::size_t>& cols) const
{
  GroupRingMatrix out(oracle_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

bool GroupRingMatrix::is_zero() const
{
  for (const auto& e : data_)
    if (!e.is_zero())
      return false;
  return true;
}

bool GroupRingMatrix::operator==(const GroupRingMatrix& other) const
{
  return oracle_ == other.oracle_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

std::string GroupRingMatrix::to_string() const
{
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j)
      s += (j ? ", " : "") + (*this)(i, j).to_string();
  }
  return s + "]";
}

GroupRingElement mat_trace_product(const GroupRingMatrix& A, const GroupRingMatrix& B)
{
  if (A.oracle() != B.oracle())
    throw OracleMismatch("matrices over different oracles");
  if (A.rows() != B.cols() || A.cols() != B.rows())
    throw DimensionMismatch("trace product needs p x q and q x p matrices");
  GroupRingElement out(A.oracle());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero() && !B(j, i).is_zero())
        out += A(i, j) * B(j, i);
  return out;
}

}  // namespace orbitrace
