#include "quivgr/specialize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "quivgr/error.hpp"
#include "quivgr/homalg.hpp"

namespace quivgr {

namespace {

CoverReport cover_report(const BongartzData& bd, const DimVector& e, BettiCache* cache) {
  const TypeAQuiver& q = bd.quiver;
  CoverReport r;
  r.m = bd.m;
  r.n = bd.n;
  r.x1 = bd.x1;
  r.s1 = bd.s1;
  r.p_n = betti_recursion(q, bd.n, e, cache);
  r.p_m = betti_recursion(q, bd.m, e, cache);
  r.kernel = r.p_n - r.p_m;
  r.strata = strata_table(bd, e, cache);
  r.closed_sum = strata_sum(r.strata, 1);
  r.monotone = r.p_m.leq(r.p_n);
  r.identity_ok = r.kernel == r.closed_sum && strata_sum(r.strata) == r.p_n && strata_sum(r.strata, 0) == r.p_m;
  return r;
}

void require_sub(const TypeAQuiver& q, const DimVector& e) {
  if (e.size() != q.vertex_count()) throw InvalidArgument("sub dimension vector has the wrong length");
}

}  // namespace

CoverReport check_cover(const TypeAQuiver& q, const RepClass& m, const RepClass& n, const DimVector& e, BettiCache* cache) {
  require_sub(q, e);
  const BongartzData bd = bongartz_data(q, m, n);
  boundary_check(bd);
  return cover_report(bd, e, cache);
}

CoverReport check_cover(const DegenPoset& poset, const RepClass& m, const RepClass& n, const DimVector& e, BettiCache* cache) {
  require_sub(poset.quiver, e);
  const BongartzData bd = bongartz_data(poset, m, n);
  boundary_check(bd);
  return cover_report(bd, e, cache);
}

SpecializationReport check_degeneration(const TypeAQuiver& q, const RepClass& m, const RepClass& n, const DimVector& e) {
  require_sub(q, e);
  if (!hom_leq(q, m, n)) throw InvalidArgument(m.to_string() + " does not degenerate to " + n.to_string());
  BettiCache cache(q);
  SpecializationReport r{q, e, m, n, {}, betti_recursion(q, n, e, &cache), betti_recursion(q, m, e, &cache), {}};
  r.kernel = r.p_n - r.p_m;
  if (!(m == n)) {
    const DegenPoset poset = degeneration_poset(q, dim_of(q, m));
    const int target = poset.index_of(n);
    int at = poset.index_of(m);
    PoincarePoly link_sum;
    while (at != target) {
      int next = -1;
      for (int j : poset.upper_covers(at))
        if (poset.leq[j][target]) {
          next = j;
          break;
        }
      ensure(next >= 0, "no upper cover of " + poset.nodes[at].to_string() + " lies below " + n.to_string());
      r.chain.push_back(check_cover(poset, poset.nodes[at], poset.nodes[next], e, &cache));
      const CoverReport& link = r.chain.back();
      r.monotone = r.monotone && link.monotone;
      r.identity_ok = r.identity_ok && link.identity_ok;
      link_sum += link.kernel;
      at = next;
    }
    r.telescopes = link_sum == r.kernel;
  }
  r.monotone = r.monotone && r.p_m.leq(r.p_n);
  return r;
}

VerifySummary verify_theorem(const TypeAQuiver& q, const DimVector& d, const VerifyOptions& options) {
  if (d.size() != q.vertex_count()) throw InvalidArgument("dimension vector has the wrong length");
  if (d.total() > 12 || q.vertex_count() > 6)
    throw InvalidArgument("verify: dimension vector " + d.to_string() + " is beyond desk scale (total <= 12, n <= 6)");
  const auto start = std::chrono::steady_clock::now();

  const DegenPoset poset = degeneration_poset(q, d);
  VerifySummary s{q, d, poset.nodes, {}, sub_dimension_vectors(d), {}, {}, 0, 0};
  BettiCache cache(q);

  std::vector<std::optional<BongartzData>> data;
  for (const auto& [i, j] : poset.covers) {
    CoverInfo info{i, j, {}, {}, {}, false, {}};
    try {
      BongartzData bd = bongartz_data(poset, poset.nodes[i], poset.nodes[j]);
      boundary_check(bd);
      info.x1 = bd.x1;
      info.s1 = bd.s1;
      info.y1 = bd.y1;
      info.bongartz_ok = true;
      data.emplace_back(std::move(bd));
    } catch (const std::exception& ex) {
      info.error = ex.what();
      data.emplace_back(std::nullopt);
    }
    s.covers.push_back(std::move(info));
  }

  for (int c = 0; c < static_cast<int>(s.covers.size()); ++c)
    for (const auto& e : s.subs) s.cover_checks.push_back(CoverCheck{c, e, {}, {}, {}, false, false, {}});
  for (int v = 0; v < static_cast<int>(s.nodes.size()); ++v)
    for (const auto& e : s.subs) s.node_checks.push_back(NodeCheck{v, e, {}, {}, false, false, true, {}});

  const std::size_t total = s.cover_checks.size() + s.node_checks.size();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < total;) {
      if (t < s.cover_checks.size()) {
        CoverCheck& c = s.cover_checks[t];
        try {
          if (!data[c.cover]) throw InvariantViolation("Bongartz data unavailable: " + s.covers[c.cover].error);
          const CoverReport r = cover_report(*data[c.cover], c.e, &cache);
          c.p_n = r.p_n;
          c.p_m = r.p_m;
          c.kernel = r.kernel;
          c.monotone = r.monotone;
          c.identity_ok = r.identity_ok;
        } catch (const std::exception& ex) {
          c.error = ex.what();
        }
      } else {
        NodeCheck& c = s.node_checks[t - s.cover_checks.size()];
        try {
          const RepClass& m = s.nodes[c.node];
          c.p = betti_recursion(q, m, c.e, &cache);
          c.bound = grassmannian_product(d, c.e);
          c.below = c.p.leq(c.bound);
          c.semisimple = is_semisimple(m);
          c.equal_if_semisimple = !c.semisimple || c.p == c.bound;
        } catch (const std::exception& ex) {
          c.error = ex.what();
        }
      }
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }

  for (const auto& c : s.covers) s.failures += c.bongartz_ok ? 0 : 1;
  for (const auto& c : s.cover_checks) s.failures += c.ok() ? 0 : 1;
  for (const auto& c : s.node_checks) s.failures += c.ok() ? 0 : 1;
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

PbwData pbw_rep(int n, const std::vector<int>& i_tuple) {
  if (n < 1) throw InvalidArgument("pbw: n must be at least 1");
  for (std::size_t l = 0; l < i_tuple.size(); ++l) {
    if (i_tuple[l] < 1 || i_tuple[l] > n - 1)
      throw InvalidArgument("pbw: entry " + std::to_string(i_tuple[l]) + " outside 1.." + std::to_string(n - 1));
    if (l > 0 && i_tuple[l] <= i_tuple[l - 1]) throw InvalidArgument("pbw: tuple must be strictly increasing");
  }
  const TypeAQuiver q = TypeAQuiver::equioriented(n);
  const int k = static_cast<int>(i_tuple.size());
  PbwData out;
  out.m.add(Interval{1, n}, n + 1 - k);
  for (int i : i_tuple) {
    out.m.add(Interval{1, i});
    out.m.add(Interval{i + 1, n});
  }
  out.d = DimVector(std::vector<int>(n, n + 1));
  std::vector<int> e(n);
  for (int v = 1; v <= n; ++v) e[v - 1] = v;
  out.e = DimVector(e);
  ensure(dim_of(q, out.m) == out.d, "dim M^i = " + dim_of(q, out.m).to_string() + ", expected " + out.d.to_string());
  ensure(hom_leq(q, RepClass::single(Interval{1, n}, n + 1), out.m), "P_1^(n+1) does not degenerate to M^i");
  return out;
}

}  // namespace quivgr
