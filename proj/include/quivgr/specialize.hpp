#pragma once

// Graded-dimension checks of the specialization maps H*(Gr_e(N)) -> H*(Gr_e(M))
// along degenerations M <= N.

#include <optional>
#include <string>
#include <vector>

#include "quivgr/degen.hpp"
#include "quivgr/grass.hpp"

namespace quivgr {

struct CoverReport {
  RepClass m;
  RepClass n;
  Interval x1;
  Interval s1;
  PoincarePoly p_n;
  PoincarePoly p_m;
  PoincarePoly kernel;      // p_n - p_m
  PoincarePoly closed_sum;  // sum of the i = 1 strata
  std::vector<StratumRecord> strata;
  bool monotone = false;
  bool identity_ok = false;
};

CoverReport check_cover(const TypeAQuiver& q, const RepClass& m, const RepClass& n, const DimVector& e,
                        BettiCache* cache = nullptr);
CoverReport check_cover(const DegenPoset& poset, const RepClass& m, const RepClass& n, const DimVector& e,
                        BettiCache* cache = nullptr);

struct SpecializationReport {
  TypeAQuiver quiver;
  DimVector e;
  RepClass m;
  RepClass n;
  std::vector<CoverReport> chain;  // links from m upward to n
  PoincarePoly p_n;
  PoincarePoly p_m;
  PoincarePoly kernel;
  bool monotone = true;     // every link and end to end
  bool identity_ok = true;  // every link
  bool telescopes = true;   // link kernels add up to the end-to-end kernel
};

/// Walks a saturated chain from m up to n, always taking the first upper
/// cover (in node order) that is still <= n.
SpecializationReport check_degeneration(const TypeAQuiver& q, const RepClass& m, const RepClass& n, const DimVector& e);

struct VerifyOptions {
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct CoverCheck {
  int cover = 0;  // index into VerifySummary::covers
  DimVector e;
  PoincarePoly p_n;
  PoincarePoly p_m;
  PoincarePoly kernel;
  bool monotone = false;
  bool identity_ok = false;
  std::string error;  // non-empty when the check threw
  bool ok() const { return error.empty() && monotone && identity_ok; }
};

struct NodeCheck {
  int node = 0;
  DimVector e;
  PoincarePoly p;
  PoincarePoly bound;  // product of Gaussian binomials
  bool below = false;
  bool semisimple = false;
  bool equal_if_semisimple = true;
  std::string error;
  bool ok() const { return error.empty() && below && equal_if_semisimple; }
};

struct CoverInfo {
  int m = 0;  // node indices, m covered by n
  int n = 0;
  Interval x1;
  Interval s1;
  RepClass y1;
  bool bongartz_ok = false;
  std::string error;
};

struct VerifySummary {
  TypeAQuiver quiver;
  DimVector dim;
  std::vector<RepClass> nodes;
  std::vector<CoverInfo> covers;
  std::vector<DimVector> subs;
  std::vector<CoverCheck> cover_checks;
  std::vector<NodeCheck> node_checks;
  int failures = 0;
  double seconds = 0;
};

/// Every cover of the degeneration poset of d against every 0 <= e <= d,
/// plus the Gaussian-binomial bound on every node. Failures are recorded.
VerifySummary verify_theorem(const TypeAQuiver& q, const DimVector& d, const VerifyOptions& options = {});

struct PbwData {
  RepClass m;
  DimVector d;
  DimVector e;
};

/// M^i = P_1^{n+1-k} + sum_l (I_{i_l} + P_{i_l+1}) on 1 -> 2 -> ... -> n.
PbwData pbw_rep(int n, const std::vector<int>& i_tuple);

}  // namespace quivgr
