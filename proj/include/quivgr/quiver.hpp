#pragma once

// Type-A quivers, dimension vectors, interval modules and isomorphism
// classes of representations, plus explicit matrix realizations.
//
// Vertices are numbered 1..n. Edge i (1 <= i < n) joins vertices i and i+1;
// its orientation says which way the arrow points.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quivgr/linalg.hpp"

namespace quivgr {

enum class Orientation : std::uint8_t {
  Forward,   // i -> i+1
  Backward,  // i+1 -> i
};

class TypeAQuiver {
 public:
  TypeAQuiver(int n, std::vector<Orientation> orientation);

  /// 1 -> 2 -> ... -> n
  static TypeAQuiver equioriented(int n);

  /// All 2^(n-1) orientations of A_n, ordered by their flag strings (F < B).
  static std::vector<TypeAQuiver> all_orientations(int n);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Orientation>& orientation() const noexcept { return orientation_; }
  Orientation edge(int i) const { return orientation_.at(i - 1); }
  int edge_source(int i) const { return edge(i) == Orientation::Forward ? i : i + 1; }
  int edge_target(int i) const { return edge(i) == Orientation::Forward ? i + 1 : i; }

  /// "A3:FB"; "A1:" for a single vertex.
  std::string to_string() const;

  friend bool operator==(const TypeAQuiver&, const TypeAQuiver&) = default;

 private:
  int n_;
  std::vector<Orientation> orientation_;
};

/// Per-vertex non-negative integers; entry(v) is 1-based.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> entries);
  DimVector(std::initializer_list<int> entries) : DimVector(std::vector<int>(entries)) {}

  static DimVector zero(int n) { return DimVector(std::vector<int>(n, 0)); }

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int entry(int v) const { return entries_.at(v - 1); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int total() const;
  bool is_zero() const;

  /// Componentwise order.
  bool leq(const DimVector& other) const;

  DimVector operator+(const DimVector& other) const;
  /// Throws InvalidArgument when some entry would become negative.
  DimVector operator-(const DimVector& other) const;
  /// Componentwise difference that is allowed to go negative (for tests like g - s).
  std::vector<int> signed_difference(const DimVector& other) const;

  /// "1,2,0"
  std::string to_string() const;

  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<int> entries_;
};

/// All e with 0 <= e <= d componentwise, in lexicographic order.
std::vector<DimVector> sub_dimension_vectors(const DimVector& d);

/// The indecomposable M[a,b]: one-dimensional on a..b, identities inside.
struct Interval {
  int a = 1;
  int b = 1;

  bool contains(int v) const noexcept { return a <= v && v <= b; }
  DimVector indicator(int n) const;
  std::string to_string() const;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// All n(n+1)/2 intervals in lexicographic order of (a, b).
std::vector<Interval> intervals_of(const TypeAQuiver& q);

/// An isomorphism class: a multiset of intervals kept in canonical
/// (lexicographic) order with positive multiplicities.
class RepClass {
 public:
  struct Summand {
    Interval interval;
    int multiplicity = 1;
    friend auto operator<=>(const Summand&, const Summand&) = default;
  };

  RepClass() = default;
  RepClass(std::initializer_list<Summand> summands);
  explicit RepClass(const std::vector<Interval>& copies);

  static RepClass single(Interval u, int multiplicity = 1) { return RepClass({{u, multiplicity}}); }

  void add(Interval u, int multiplicity = 1);

  const std::vector<Summand>& summands() const noexcept { return summands_; }
  bool empty() const noexcept { return summands_.empty(); }
  int multiplicity(Interval u) const;
  /// Number of indecomposable summands counted with multiplicity.
  int copy_count() const;
  /// Every copy, in canonical order, repeated per multiplicity.
  std::vector<Interval> copies() const;

  /// Multiset union.
  RepClass operator+(const RepClass& other) const;
  /// Multiset difference; throws InvalidArgument if `other` is not contained.
  RepClass operator-(const RepClass& other) const;
  RepClass intersection(const RepClass& other) const;
  bool contains(const RepClass& other) const;

  /// "[1,1],[1,2]x2"; empty string for the zero representation.
  std::string to_string() const;

  friend bool operator==(const RepClass&, const RepClass&) = default;
  /// Lexicographic on the expanded copy sequence.
  friend std::strong_ordering operator<=>(const RepClass& x, const RepClass& y);

 private:
  std::vector<Summand> summands_;
};

DimVector dim_of(const TypeAQuiver& q, const RepClass& m);

/// Every isomorphism class with dimension vector d, sorted by RepClass order.
std::vector<RepClass> enumerate_rep_classes(const TypeAQuiver& q, const DimVector& d);

/// Whether m is ⊕ S_i^{d_i}.
bool is_semisimple(const RepClass& m);
RepClass semisimple_of(const DimVector& d);

/// Concrete matrices over Q. maps[i-1] realizes edge i and has
/// dims[target] rows and dims[source] columns.
struct ExplicitRep {
  TypeAQuiver quiver;
  std::vector<int> dims;
  std::vector<QMatrix> maps;

  int dim_at(int v) const { return dims.at(v - 1); }
  const QMatrix& map_at(int edge) const { return maps.at(edge - 1); }

  /// Throws InvalidArgument unless every edge matrix has the right shape.
  void validate() const;
};

/// Block-diagonal realization: basis at each vertex lists the copies whose
/// interval contains it, in canonical order; interior edges carry 1s.
ExplicitRep explicit_of(const TypeAQuiver& q, const RepClass& m);

}  // namespace quivgr
