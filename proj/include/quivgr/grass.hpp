#pragma once

// Poincaré polynomials of quiver Grassmannians Gr_e(M): a recursion over
// split generating sequences, and an independent finite-field point count
// followed by exact interpolation.

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quivgr/degen.hpp"
#include "quivgr/poly.hpp"
#include "quivgr/quiver.hpp"

namespace quivgr {

/// Gr_e of a single interval module: a point or empty.
PoincarePoly gr_interval(const TypeAQuiver& q, Interval u, const DimVector& e);

enum class PeelTieBreak { Lexicographic, ReverseLexicographic };

/// Summand copies U_1, ..., U_k with Ext^1(U_i, U_j) = 0 whenever i < j.
std::vector<Interval> peel_order(const TypeAQuiver& q, const RepClass& m,
                                 PeelTieBreak tie_break = PeelTieBreak::Lexicographic);

/// Memo for betti_recursion keyed on (class, e, tie-break). One cache per
/// quiver; internally locked so it can be shared across worker threads.
class BettiCache {
 public:
  explicit BettiCache(TypeAQuiver q) : quiver_(std::move(q)) {}

  const TypeAQuiver& quiver() const noexcept { return quiver_; }
  std::optional<PoincarePoly> find(const std::string& key) const;
  void store(const std::string& key, const PoincarePoly& p);
  std::size_t size() const;

 private:
  TypeAQuiver quiver_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, PoincarePoly> memo_;
};

/// P(e; X + S) = sum_{f+g=e} q^<g, dim X - f> P(f; X) P(g; S), peeling S = U_1.
/// The zero polynomial encodes an empty Grassmannian.
PoincarePoly betti_recursion(const TypeAQuiver& q, const RepClass& m, const DimVector& e, BettiCache* cache = nullptr,
                             PeelTieBreak tie_break = PeelTieBreak::Lexicographic);

/// Number of e-dimensional subrepresentations of explicit_of(m) over F_p.
std::uint64_t point_count(const TypeAQuiver& q, const RepClass& m, const DimVector& e, std::uint32_t p);

/// Work (subspace pairs visited) that point_count would spend at prime p.
double point_count_cost(const TypeAQuiver& q, const RepClass& m, const DimVector& e, std::uint32_t p);

struct OracleOptions {
  double budget = 5e7;  // max point_count_cost at the largest prime used
};

/// Interpolates point counts at the first D+1 primes (D = sum e_i (d_i - e_i))
/// and checks one further prime. Throws InvalidArgument above budget and
/// InvariantViolation if the counts are not given by a non-negative integer
/// polynomial.
PoincarePoly betti_oracle(const TypeAQuiver& q, const RepClass& m, const DimVector& e, const OracleOptions& options = {});

/// First k primes.
std::vector<std::uint32_t> first_primes(int k);

/// Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.
PoincarePoly gaussian_binomial(int n, int k);

/// Poincaré polynomial of the product of ordinary Grassmannians Gr_{e_v}(C^{d_v}).
PoincarePoly grassmannian_product(const DimVector& d, const DimVector& e);

struct StratumRecord {
  DimVector f;
  DimVector g;
  int i = 0;
  int shift = 0;
  PoincarePoly base;
};

/// Strata S_{f,g}^{(i)} of the family degenerating M to N, for every f + g = e
/// and i in {0, 1}. Records with zero base carry shift 0.
std::vector<StratumRecord> strata_table(const BongartzData& bd, const DimVector& e, BettiCache* cache = nullptr);

/// sum over records with the given i of q^shift * base.
PoincarePoly strata_sum(const std::vector<StratumRecord>& records, std::optional<int> i = std::nullopt);

}  // namespace quivgr
