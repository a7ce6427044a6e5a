#pragma once

// Degeneration order (as Hom order), its covers, and the Bongartz data of a
// minimal degeneration together with the boundary modules X_S and S^X.

#include <utility>
#include <vector>

#include "quivgr/quiver.hpp"

namespace quivgr {

/// m <=_deg n: [U, m] <= [U, n] for every interval U. Requires dim m = dim n.
bool hom_leq(const TypeAQuiver& q, const RepClass& m, const RepClass& n);

struct DegenPoset {
  TypeAQuiver quiver;
  DimVector dim;
  std::vector<RepClass> nodes;
  std::vector<std::vector<bool>> leq;    // leq[i][j]: nodes[i] <= nodes[j]
  std::vector<std::pair<int, int>> covers;  // (i, j) with nodes[i] covered by nodes[j]

  int index_of(const RepClass& m) const;  // -1 if absent
  bool is_cover(const RepClass& m, const RepClass& n) const;
  /// Indices j with (i, j) a cover, ascending.
  std::vector<int> upper_covers(int i) const;
};

DegenPoset degeneration_poset(const TypeAQuiver& q, const DimVector& d);

/// M = y1 + xprime + sprime and N = x1 + s1 + xprime + sprime, with
/// 0 -> x1 -> y1 -> s1 -> 0 nonsplit.
struct BongartzData {
  TypeAQuiver quiver;
  RepClass m;
  RepClass n;
  Interval x1;
  Interval s1;
  RepClass y1;
  RepClass xprime;
  RepClass sprime;
  RepClass common;  // xprime + sprime
  RepClass x_s;     // kernel of the canonical map X -> tau S
  RepClass s_x;     // image of the canonical map tau^- X -> S
  RepClass s_mod;   // S / S^X

  RepClass x() const { return RepClass::single(x1) + xprime; }
  RepClass s() const { return RepClass::single(s1) + sprime; }
};

/// Requires (m, n) to be a cover of the Hom order; throws InvalidArgument
/// ("not a cover") otherwise.
BongartzData bongartz_data(const TypeAQuiver& q, const RepClass& m, const RepClass& n);
/// Same, reusing an already built poset for the cover test.
BongartzData bongartz_data(const DegenPoset& poset, const RepClass& m, const RepClass& n);

/// Re-derives the generating property and the two boundary identities from
/// scratch (explicit kernels and images of X -> tau S and tau^- X -> S).
/// Returns true or throws InvariantViolation naming the failed identity.
bool boundary_check(const BongartzData& bd);

}  // namespace quivgr
