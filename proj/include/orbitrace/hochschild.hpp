#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitrace/groupring.hpp"

namespace orbitrace {

/// Hochschild 1-chain: sum of n * (u tensor v) with normalized words.
class Chain1 {
 public:
  explicit Chain1(OraclePtr oracle);

  static Chain1 tensor(const GroupRingElement& a, const GroupRingElement& b);

  const OraclePtr& oracle() const { return oracle_; }
  const std::map<std::pair<Word, Word>, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& u, const Word& v, const Integer& c);

  Chain1 operator+(const Chain1& other) const;
  Chain1 operator-(const Chain1& other) const;
  Chain1 operator-() const;
  Chain1& operator+=(const Chain1& other);
  friend Chain1 operator*(const Integer& k, const Chain1& c);

  bool operator==(const Chain1& other) const;
  std::string to_string() const;

 private:
  void check(const Chain1& other) const;

  OraclePtr oracle_;
  std::map<std::pair<Word, Word>, Integer> terms_;
};

/// Hochschild 2-chain: sum of n * (s1 tensor s2 tensor m).
class Chain2 {
 public:
  explicit Chain2(OraclePtr oracle);

  const OraclePtr& oracle() const { return oracle_; }
  const std::map<std::tuple<Word, Word, Word>, Integer>& terms() const { return terms_; }
  void add(const Word& s1, const Word& s2, const Word& m, const Integer& c);

 private:
  OraclePtr oracle_;
  std::map<std::tuple<Word, Word, Word>, Integer> terms_;
};

/// d(u tensor v) = vu - uv
GroupRingElement boundary(const Chain1& c);
/// d(s1 tensor s2 tensor m) = s2 tensor m s1 - s1 s2 tensor m + s1 tensor s2 m
Chain1 boundary(const Chain2& c);

/// sum_ij A_ij tensor B_ji without the cycle check.
Chain1 trace_chain(const GroupRingMatrix& A, const GroupRingMatrix& B);
/// trace_chain after checking trace(AB) = trace(BA); throws NotACycle.
Chain1 trace_T1(const GroupRingMatrix& A, const GroupRingMatrix& B);
/// trace_T1(U, Uinv) after checking both products are the identity; throws NotInverse.
Chain1 dennis_trace(const GroupRingMatrix& U, const GroupRingMatrix& Uinv);

/// u tensor v -> u tensor v omega^-1; omega must be central, else NotCentral.
Chain1 central_action(const Word& omega, const Chain1& c);

/// Groups the terms by the conjugacy class of the marker uv.
std::map<ClassId, Chain1> canonical_decompose(const Chain1& c);

/// Value of a cycle in one conjugacy-class summand.
struct ComponentValue {
  /// Class of sum n {z} in the abelianized centralizer: H1(G) for central and
  /// abelian classes, Z = <{g_j}> for exceptional classes, Z^2 = <{gamma0}, {root}>
  /// for the remaining classes.
  AbelianElement value;
  /// Image of the value in H1(G).
  AbelianElement image;
  /// Centralizer elements z with their coefficients, before collapsing.
  std::vector<std::pair<Word, Integer>> entries;

  bool operator==(const ComponentValue& other) const { return value == other.value; }
};

class ComponentClass {
 public:
  explicit ComponentClass(OraclePtr oracle);

  const OraclePtr& oracle() const { return oracle_; }
  const std::map<ClassId, ComponentValue>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  const ComponentValue* find(const ClassId& id) const;

  /// Adds a value at a class, dropping the component if it becomes zero.
  void add(const ClassId& id, const ComponentValue& v);

  ComponentClass operator+(const ComponentClass& other) const;
  ComponentClass operator-() const;
  ComponentClass operator-(const ComponentClass& other) const { return *this + (-other); }

  /// Sum of the H1(G) images of all components.
  AbelianElement total_image() const;

  bool operator==(const ComponentClass& other) const;
  std::string to_string() const;

 private:
  OraclePtr oracle_;
  std::map<ClassId, ComponentValue> components_;
};

/// Reduces a cycle to its per-class centralizer values. Throws NotACycle,
/// UnrecognizedWord or IrreducibleTerm.
ComponentClass reduce_class(const Chain1& c);

/// sum n A(u); throws NotACycle if the boundary is nonzero.
AbelianElement epsilon_star(const Chain1& c);

/// Classes of central elements, the default Gottlieb set for the supported groups.
bool is_central_class(const GroupOracle& oracle, const ClassId& id);

std::pair<ComponentClass, ComponentClass> split_components(const ComponentClass& c,
                                                           const std::set<ClassId>& gottlieb);
/// Split with the central classes as the Gottlieb set.
std::pair<ComponentClass, ComponentClass> split_components(const ComponentClass& c);

}  // namespace orbitrace
