#pragma once

// Hom and Ext dimensions, the Auslander-Reiten translate, and explicit
// homomorphisms between representations of a type-A quiver.

#include <memory>
#include <optional>
#include <vector>

#include "quivgr/linalg.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr {

/// [U, V] for every pair of intervals, computed by exact linear algebra and
/// checked against the interval rule. One immutable table per quiver.
class HomTable {
 public:
  /// Shared, lazily built table; safe to call from several threads.
  static std::shared_ptr<const HomTable> of(const TypeAQuiver& q);

  explicit HomTable(const TypeAQuiver& q);

  const TypeAQuiver& quiver() const noexcept { return quiver_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  int index(Interval u) const;
  int operator()(Interval u, Interval v) const { return table_[index(u)][index(v)]; }

  bool is_projective(Interval u) const { return !tau_[index(u)].has_value(); }
  bool is_injective(Interval u) const { return !tau_inverse_[index(u)].has_value(); }
  std::optional<Interval> tau(Interval u) const { return tau_[index(u)]; }
  std::optional<Interval> tau_inverse(Interval u) const { return tau_inverse_[index(u)]; }

  /// Coxeter matrix acting on dimension vectors (column convention).
  const QMatrix& coxeter() const noexcept { return coxeter_; }

 private:
  TypeAQuiver quiver_;
  std::vector<Interval> intervals_;
  std::vector<std::vector<int>> table_;
  QMatrix coxeter_;
  std::vector<std::optional<Interval>> tau_;
  std::vector<std::optional<Interval>> tau_inverse_;
};

/// Vertices reachable from v along arrows (support of P_v), as an interval.
Interval projective_at(const TypeAQuiver& q, int v);
/// Vertices from which v is reachable (support of I_v).
Interval injective_at(const TypeAQuiver& q, int v);

/// Combinatorial [U, V]: 1 iff the overlap of U and V is a quotient of U and
/// a subrepresentation of V.
int interval_hom_rule(const TypeAQuiver& q, Interval u, Interval v);

/// <d, e> = sum d_i e_i - sum over arrows s->t of d_s e_t.
int euler_form(const TypeAQuiver& q, const DimVector& d, const DimVector& e);

int hom_dim(const ExplicitRep& f, const ExplicitRep& g);
int hom_dim(const TypeAQuiver& q, const RepClass& m, const RepClass& n);

/// dim Ext^1(m, n) via the hereditary identity.
int ext_dim(const TypeAQuiver& q, const RepClass& m, const RepClass& n);

enum class TauDirection { Forward, Inverse };

/// tau(u) (nullopt iff projective) or tau^-(u) (nullopt iff injective).
std::optional<Interval> tau(const TypeAQuiver& q, Interval u, TauDirection direction = TauDirection::Forward);

/// tau applied summandwise; projective summands vanish.
RepClass tau_of(const TypeAQuiver& q, const RepClass& m, TauDirection direction = TauDirection::Forward);

/// The class m with [U, m] = [U, f] for every interval U.
RepClass iso_identify(const ExplicitRep& f);

/// A morphism of representations, one matrix per vertex
/// (components[v-1] is target.dims[v-1] x source.dims[v-1]).
struct ExplicitHom {
  ExplicitRep source;
  ExplicitRep target;
  std::vector<QMatrix> components;

  /// Exact check of the commuting square on every edge.
  bool intertwines() const;
  bool is_zero() const;
};

/// Basis of Hom(f, g).
std::vector<ExplicitHom> hom_basis(const ExplicitRep& f, const ExplicitRep& g);

/// sum_k coefficients[k] * basis[k]; basis must be nonempty.
ExplicitHom linear_combination(const std::vector<ExplicitHom>& basis, const std::vector<Rational>& coefficients);

enum class Subquotient { Kernel, Image, Cokernel };

ExplicitRep subquotient(const ExplicitHom& h, Subquotient which);
RepClass subquotient_class(const ExplicitHom& h, Subquotient which);

/// Middle term Y of the nonsplit sequence 0 -> x1 -> Y -> s1 -> 0.
/// Requires dim Ext^1(s1, x1) = 1.
RepClass middle_term(const TypeAQuiver& q, Interval x1, Interval s1);

}  // namespace quivgr
