#include "quivgr/degen.hpp"

#include <algorithm>
#include <set>

#include "quivgr/error.hpp"
#include "quivgr/homalg.hpp"

namespace quivgr {

namespace {

std::vector<int> hom_profile(const TypeAQuiver& q, const RepClass& m) {
  const auto table = HomTable::of(q);
  std::vector<int> profile;
  for (const auto& u : table->intervals()) profile.push_back(hom_dim(q, RepClass::single(u), m));
  return profile;
}

bool profile_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Kernel (or image) of the unique-up-to-scalar nonzero map between two classes.
RepClass canonical_map_part(const TypeAQuiver& q, const RepClass& from, const RepClass& to, Subquotient which,
                            const std::string& what) {
  const auto basis = hom_basis(explicit_of(q, from), explicit_of(q, to));
  ensure(basis.size() == 1, "Hom space for " + what + " has dimension " + std::to_string(basis.size()) + ", expected 1");
  return subquotient_class(basis.front(), which);
}

}  // namespace

bool hom_leq(const TypeAQuiver& q, const RepClass& m, const RepClass& n) {
  if (dim_of(q, m) != dim_of(q, n)) throw InvalidArgument("hom_leq: dimension vectors differ");
  return profile_leq(hom_profile(q, m), hom_profile(q, n));
}

int DegenPoset::index_of(const RepClass& m) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), m);
  if (it == nodes.end() || !(*it == m)) return -1;
  return static_cast<int>(it - nodes.begin());
}

bool DegenPoset::is_cover(const RepClass& m, const RepClass& n) const {
  const int i = index_of(m);
  const int j = index_of(n);
  if (i < 0 || j < 0) return false;
  return std::find(covers.begin(), covers.end(), std::make_pair(i, j)) != covers.end();
}

std::vector<int> DegenPoset::upper_covers(int i) const {
  std::vector<int> out;
  for (const auto& [a, b] : covers)
    if (a == i) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

DegenPoset degeneration_poset(const TypeAQuiver& q, const DimVector& d) {
  DegenPoset p{q, d, enumerate_rep_classes(q, d), {}, {}};
  const int count = static_cast<int>(p.nodes.size());
  std::vector<std::vector<int>> profiles;
  for (const auto& m : p.nodes) profiles.push_back(hom_profile(q, m));
  p.leq.assign(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) p.leq[i][j] = profile_leq(profiles[i], profiles[j]);

  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool direct = true;
      for (int k = 0; k < count && direct; ++k)
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) direct = false;
      if (direct) p.covers.emplace_back(i, j);
    }
  return p;
}

BongartzData bongartz_data(const TypeAQuiver& q, const RepClass& m, const RepClass& n) {
  if (dim_of(q, m) != dim_of(q, n)) throw InvalidArgument("not a cover: dimension vectors differ");
  const DegenPoset poset = degeneration_poset(q, dim_of(q, m));
  return bongartz_data(poset, m, n);
}

BongartzData bongartz_data(const DegenPoset& poset, const RepClass& m, const RepClass& n) {
  const TypeAQuiver& q = poset.quiver;
  if (!poset.is_cover(m, n)) throw InvalidArgument("not a cover: " + m.to_string() + " < " + n.to_string());

  BongartzData bd{q, m, n, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  bd.common = m.intersection(n);
  const RepClass n_extra = n - bd.common;
  const RepClass m_extra = m - bd.common;
  ensure(n_extra.copy_count() == 2,
         "minimal degeneration " + m.to_string() + " < " + n.to_string() + " does not differ by two indecomposables in N");
  const auto two = n_extra.copies();
  const RepClass a = RepClass::single(two[0]);
  const RepClass b = RepClass::single(two[1]);
  const int ab = ext_dim(q, a, b);
  const int ba = ext_dim(q, b, a);
  ensure((ab == 1) != (ba == 1), "exactly one ordering of the N-extras must carry a one-dimensional Ext");
  if (ab == 1) {
    bd.s1 = two[0];
    bd.x1 = two[1];
  } else {
    bd.s1 = two[1];
    bd.x1 = two[0];
  }
  bd.y1 = middle_term(q, bd.x1, bd.s1);
  ensure(bd.y1 == m_extra, "middle term " + bd.y1.to_string() + " does not match the M-extras " + m_extra.to_string());

  // Nodes: distinct summand classes of the common part, plus y1 as one node.
  // Arrow P -> Q when Ext^1(P, Q) != 0, which forces Q before P.
  std::vector<RepClass> nodes;
  for (const auto& s : bd.common.summands()) nodes.push_back(RepClass::single(s.interval));
  const int y = static_cast<int>(nodes.size());
  nodes.push_back(bd.y1);
  const int count = static_cast<int>(nodes.size());
  std::vector<std::vector<bool>> arrow(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j) arrow[i][j] = ext_dim(q, nodes[i], nodes[j]) != 0;

  // The facts about Ext around a middle term that the splitting relies on.
  for (int i = 0; i < y; ++i) {
    ensure(!(arrow[i][y] && arrow[y][i]), "Ext in both directions between y1 and " + nodes[i].to_string());
    for (int j = 0; j < y; ++j)
      if (arrow[j][y] && arrow[y][i])
        ensure(ext_dim(q, nodes[i], nodes[j]) == 0, "Ext^1(A,B) != 0 with Ext^1(B,Y1) and Ext^1(Y1,A) nonzero");
  }

  // Acyclicity via Kahn's algorithm.
  {
    std::vector<int> pending(count, 0);
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j)
        if (arrow[i][j]) ++pending[i];
    std::vector<bool> done(count, false);
    for (int placed = 0; placed < count; ++placed) {
      int next = -1;
      for (int i = 0; i < count && next < 0; ++i)
        if (!done[i] && pending[i] == 0) next = i;
      ensure(next >= 0, "Ext relation among the summands of a minimal degeneration has a cycle");
      done[next] = true;
      for (int i = 0; i < count; ++i)
        if (arrow[i][next]) --pending[i];
    }
  }

  // S' < Y1 < X' must be a linear extension: classes reachable from y1 are
  // forced into S', classes reaching y1 into X'. The rest are split by search,
  // fewest classes in S' first, keeping the conditions on (X1, S1).
  auto reach = [&](bool forward) {
    std::vector<bool> seen(count, false);
    std::vector<int> stack{y};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < count; ++j)
        if ((forward ? arrow[i][j] : arrow[j][i]) && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    return seen;
  };
  const std::vector<bool> before = reach(true);
  const std::vector<bool> after = reach(false);
  ensure(!before[y] && !after[y], "y1 precedes itself in the Ext order");
  std::vector<int> free;
  for (int i = 0; i < y; ++i)
    if (!before[i] && !after[i]) free.push_back(i);
  ensure(free.size() < 20, "too many unordered summand classes");
  std::vector<unsigned> masks(1u << free.size());
  for (unsigned k = 0; k < masks.size(); ++k) masks[k] = k;
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });

  const auto& common = bd.common.summands();
  const RepClass x1c = RepClass::single(bd.x1);
  const RepClass s1c = RepClass::single(bd.s1);
  bool found = false;
  for (unsigned mask : masks) {
    RepClass sp, xp;
    for (int i = 0; i < y; ++i) {
      bool in_s = before[i];
      for (std::size_t k = 0; k < free.size(); ++k)
        if (free[k] == i) in_s = mask >> k & 1u;
      (in_s ? sp : xp).add(common[i].interval, common[i].multiplicity);
    }
    if (ext_dim(q, sp, xp) != 0 || ext_dim(q, sp, bd.y1) != 0 || ext_dim(q, bd.y1, xp) != 0) continue;
    if (ext_dim(q, s1c + sp, x1c + xp) != ext_dim(q, s1c, x1c)) continue;
    if (ext_dim(q, x1c, xp) != 0 || ext_dim(q, sp, s1c) != 0) continue;
    bd.sprime = sp;
    bd.xprime = xp;
    found = true;
    break;
  }
  ensure(found, "no splitting of the common summands of " + m.to_string() + " < " + n.to_string() +
                    " satisfies the type-A Bongartz conditions");

  ensure(m == bd.y1 + bd.xprime + bd.sprime, "M != Y1 + X' + S'");
  ensure(n == x1c + s1c + bd.xprime + bd.sprime, "N != X1 + S1 + X' + S'");
  ensure(ext_dim(q, bd.s(), bd.x()) == ext_dim(q, s1c, x1c), "Ext^1(S1+S', X1+X') != Ext^1(S1, X1)");
  ensure(ext_dim(q, x1c, bd.xprime) == 0, "Ext^1(X1, X') != 0");
  ensure(ext_dim(q, bd.sprime, s1c) == 0, "Ext^1(S', S1) != 0");
  // Bongartz's characterization of minimality, on every summand of N.
  for (const auto& s : n.summands()) {
    const RepClass u = RepClass::single(s.interval);
    if (!(s.interval == bd.s1)) ensure(ext_dim(q, u, m) == ext_dim(q, u, n), "Ext^1(A, M) != Ext^1(A, N) for A = " + u.to_string());
    if (!(s.interval == bd.x1)) ensure(ext_dim(q, m, u) == ext_dim(q, n, u), "Ext^1(M, B) != Ext^1(N, B) for B = " + u.to_string());
  }

  // Boundary modules from the indecomposable ends of the sequence.
  const auto tau_s1 = tau(q, bd.s1, TauDirection::Forward);
  const auto tau_inv_x1 = tau(q, bd.x1, TauDirection::Inverse);
  ensure(tau_s1.has_value() && tau_inv_x1.has_value(), "S1 projective or X1 injective despite Ext^1(S1, X1) != 0");
  bd.x_s = bd.xprime + canonical_map_part(q, x1c, RepClass::single(*tau_s1), Subquotient::Kernel, "X1 -> tau S1");
  bd.s_x = canonical_map_part(q, RepClass::single(*tau_inv_x1), s1c, Subquotient::Image, "tau^- X1 -> S1");
  bd.s_mod = bd.sprime + canonical_map_part(q, RepClass::single(*tau_inv_x1), s1c, Subquotient::Cokernel, "tau^- X1 -> S1");
  ensure(dim_of(q, bd.s_mod) == dim_of(q, bd.s()) - dim_of(q, bd.s_x), "S/S^X has the wrong dimension vector");
  return bd;
}

bool boundary_check(const BongartzData& bd) {
  const TypeAQuiver& q = bd.quiver;
  const RepClass x = bd.x();
  const RepClass s = bd.s();
  ensure(ext_dim(q, s, x) == 1, "sequence 0 -> X -> M -> S -> 0 is not generating: Ext^1(S, X) = " +
                                     std::to_string(ext_dim(q, s, x)));
  ensure(bd.y1 + bd.xprime + bd.sprime == bd.m, "M is not Y1 + X' + S'");
  ensure(ext_dim(q, RepClass::single(bd.x1), bd.xprime) == 0, "Ext^1(X1, X') != 0");
  ensure(ext_dim(q, bd.sprime, RepClass::single(bd.s1)) == 0, "Ext^1(S', S1) != 0");
  const RepClass x_s = canonical_map_part(q, x, tau_of(q, s, TauDirection::Forward), Subquotient::Kernel, "X -> tau S");
  ensure(x_s == bd.x_s, "X_S = " + x_s.to_string() + " but X' + (X1)_{S1} = " + bd.x_s.to_string());
  const RepClass s_x = canonical_map_part(q, tau_of(q, x, TauDirection::Inverse), s, Subquotient::Image, "tau^- X -> S");
  ensure(s_x == bd.s_x, "S^X = " + s_x.to_string() + " but (S1)^{X1} = " + bd.s_x.to_string());
  const RepClass s_mod = canonical_map_part(q, tau_of(q, x, TauDirection::Inverse), s, Subquotient::Cokernel, "tau^- X -> S");
  ensure(s_mod == bd.s_mod, "S/S^X = " + s_mod.to_string() + " but S' + S1/(S1)^{X1} = " + bd.s_mod.to_string());
  return true;
}

}  // namespace quivgr
