#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbitrace/abelian.hpp"
#include "orbitrace/seifert_data.hpp"
#include "orbitrace/word.hpp"

namespace orbitrace {

/// Class of gamma0^k.
struct CentralClass {
  std::int64_t k = 0;
  auto operator<=>(const CentralClass&) const = default;
};

/// Class of gamma0^k * g_j^i with 0 < i < mu_j; fiber is 1-based.
struct ExceptionalClass {
  int fiber = 0;
  std::int64_t i = 0;
  std::int64_t k = 0;
  auto operator<=>(const ExceptionalClass&) const = default;
};

/// Element of an abelian group, given by its normal-form exponent vector.
struct AbelianValueClass {
  std::vector<std::int64_t> value;
  auto operator<=>(const AbelianValueClass&) const = default;
};

/// Any other class, keyed by its canonical cyclically reduced representative.
struct OpaqueClass {
  Word word;
  auto operator<=>(const OpaqueClass&) const = default;
};

using ClassId = std::variant<CentralClass, ExceptionalClass, AbelianValueClass, OpaqueClass>;

/// Canonical representative of a conjugacy class and a word carrying an
/// element onto it: conjugator * x * conjugator^-1 = representative.
struct Conjugacy {
  ClassId id;
  Word representative;
  Word conjugator;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relations;
};

/// Normal forms and decision procedures for one group.
///
/// FreeAbelian and FiniteCyclic groups have a solved word problem. Bounded
/// Seifert groups are central extensions of free products of cyclic groups
/// and the syllable normal form is exact for them. Closed Seifert groups are
/// exact only on words gamma0^k g_j^i; other words are flagged unrecognized.
class GroupOracle {
 public:
  enum class Kind { FreeAbelian, FiniteCyclic, SeifertClosed, SeifertBounded };

  static std::shared_ptr<const GroupOracle> free_abelian(int rank);
  static std::shared_ptr<const GroupOracle> finite_cyclic(std::int64_t order);
  static std::shared_ptr<const GroupOracle> seifert(const SeifertData& data);

  Kind kind() const { return kind_; }
  bool is_seifert() const { return kind_ == Kind::SeifertClosed || kind_ == Kind::SeifertBounded; }
  /// Order of a FiniteCyclic group, 0 otherwise.
  std::int64_t cyclic_order() const { return order_; }
  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  /// Generator id for a name, or -1.
  int generator_id(const std::string& name) const;
  std::string describe() const;
  /// Whether both oracles were built from the same group data.
  bool same_group(const GroupOracle& other) const;

  Word normalize(const Word& w) const;
  bool equal(const Word& a, const Word& b) const { return normalize(a) == normalize(b); }
  /// Whether equality decisions involving w are exact.
  bool recognized(const Word& w) const;
  /// True when the oracle's group is abelian (decided from the data).
  bool is_abelian() const { return abelian_; }
  /// Seifert: whether {gamma0} has infinite order in H1; abelian oracles: true.
  bool exact() const { return exact_; }
  bool is_central(const Word& w) const;

  std::string format(const Word& w) const { return normalize(w).to_string(names_); }

  ClassId class_id(const Word& w) const;
  Conjugacy conjugacy(const Word& w) const;
  /// Text of the canonical representative, such as "gamma0^-1*g1".
  std::string class_key(const ClassId& id) const;
  /// Label with the inverse representative: C(g1^i) for the class of g1^-i.
  std::string class_label(const ClassId& id) const;

  /// Group in which centralizer values of the given class are recorded.
  std::shared_ptr<const FgAbelianGroup> centralizer_group(const ClassId& id) const;
  /// Value of z, an element of the centralizer of the representative, in
  /// the abelianized centralizer. Throws IrreducibleTerm if z is not
  /// recognized as lying in the centralizer.
  AbelianElement centralizer_value(const Conjugacy& c, const Word& z) const;

  const Presentation& presentation() const { return presentation_; }
  const AbelianPresentation& abelianization() const { return *abelianization_; }
  const std::shared_ptr<const FgAbelianGroup>& h1() const { return abelianization_->group(); }
  AbelianElement abelianize(const Word& w) const;

  // Seifert accessors
  const std::optional<SeifertData>& seifert_data() const { return seifert_; }
  Word gamma0() const;
  /// Word g_j for 1-based fiber index j.
  Word fiber(int j) const;
  std::int64_t fiber_order(int j) const;
  int fiber_gen(int j) const;

 private:
  struct Syllables {
    std::int64_t k = 0;
    std::vector<Letter> syl;
  };

  GroupOracle() = default;
  void finish();
  void check_gens(const Word& w) const;
  Syllables seifert_syllables(const Word& w) const;
  Word from_syllables(const Syllables& s) const;
  std::int64_t factor_order(int gen) const { return factor_mu_.at(static_cast<std::size_t>(gen)); }

  Kind kind_ = Kind::FreeAbelian;
  std::int64_t order_ = 0;
  std::vector<std::string> names_;
  std::optional<SeifertData> seifert_;
  std::vector<std::int64_t> factor_mu_;  // per generator: mu for g_j, 0 otherwise
  std::vector<int> fiber_gen_;           // gen id of g_j
  Presentation presentation_;
  std::shared_ptr<const AbelianPresentation> abelianization_;
  std::shared_ptr<const FgAbelianGroup> z1_;
  std::shared_ptr<const FgAbelianGroup> z2_;
  bool abelian_ = true;
  bool exact_ = true;
};

using OraclePtr = std::shared_ptr<const GroupOracle>;

}  // namespace orbitrace
