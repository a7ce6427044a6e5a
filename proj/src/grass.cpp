#include "quivgr/grass.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>

#include "quivgr/error.hpp"
#include "quivgr/homalg.hpp"

namespace quivgr {

PoincarePoly gr_interval(const TypeAQuiver& q, Interval u, const DimVector& e) {
  const int n = q.vertex_count();
  if (e.size() != n) throw InvalidArgument("gr_interval: dimension vector length mismatch");
  for (int v = 1; v <= n; ++v) {
    if (e.entry(v) > 1) return {};
    if (e.entry(v) == 1 && !u.contains(v)) return {};
  }
  for (int i = u.a; i < u.b; ++i)
    if (e.entry(q.edge_source(i)) == 1 && e.entry(q.edge_target(i)) == 0) return {};
  return PoincarePoly::one();
}

std::vector<Interval> peel_order(const TypeAQuiver& q, const RepClass& m, PeelTieBreak tie_break) {
  std::vector<RepClass::Summand> remaining = m.summands();
  if (tie_break == PeelTieBreak::ReverseLexicographic) std::reverse(remaining.begin(), remaining.end());
  const auto table = HomTable::of(q);
  auto ext = [&](Interval a, Interval b) {
    return (*table)(a, b) - euler_form(q, a.indicator(q.vertex_count()), b.indicator(q.vertex_count()));
  };
  std::vector<Interval> order;
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](const RepClass::Summand& u) {
      return std::none_of(remaining.begin(), remaining.end(),
                          [&](const RepClass::Summand& v) { return !(v.interval == u.interval) && ext(u.interval, v.interval) != 0; });
    });
    ensure(it != remaining.end(), "Ext relation on the summands of " + m.to_string() + " has a cycle");
    order.insert(order.end(), it->multiplicity, it->interval);
    remaining.erase(it);
  }
  return order;
}

std::optional<PoincarePoly> BettiCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  return std::nullopt;
}

void BettiCache::store(const std::string& key, const PoincarePoly& p) {
  std::lock_guard lock(mutex_);
  memo_.emplace(key, p);
}

std::size_t BettiCache::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

PoincarePoly betti_recursion(const TypeAQuiver& q, const RepClass& m, const DimVector& e, BettiCache* cache,
                             PeelTieBreak tie_break) {
  const int n = q.vertex_count();
  if (e.size() != n) throw InvalidArgument("betti_recursion: dimension vector length mismatch");
  if (cache && !(cache->quiver() == q)) throw InvalidArgument("betti cache belongs to another quiver");
  const DimVector d = dim_of(q, m);
  if (!e.leq(d)) return {};
  if (m.empty()) return PoincarePoly::one();
  if (m.copy_count() == 1) return gr_interval(q, m.summands().front().interval, e);

  const std::string key = m.to_string() + "|" + e.to_string() + (tie_break == PeelTieBreak::Lexicographic ? "|L" : "|R");
  if (cache)
    if (auto hit = cache->find(key)) return *hit;

  const Interval peeled = peel_order(q, m, tie_break).front();
  const RepClass rest = m - RepClass::single(peeled);
  const DimVector rest_dim = dim_of(q, rest);

  PoincarePoly total;
  // g runs over the 0/1 vectors supported on the peeled interval.
  const int len = peeled.b - peeled.a + 1;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::vector<int> g_entries(n, 0);
    for (int k = 0; k < len; ++k)
      if (mask >> k & 1u) g_entries[peeled.a - 1 + k] = 1;
    const DimVector g(g_entries);
    if (!g.leq(e)) continue;
    const PoincarePoly p_s = gr_interval(q, peeled, g);
    if (p_s.is_zero()) continue;
    const DimVector f = e - g;
    const PoincarePoly p_x = betti_recursion(q, rest, f, cache, tie_break);
    if (p_x.is_zero()) continue;
    const int shift = euler_form(q, g, rest_dim - f);
    ensure(shift >= 0, "negative affine rank in the split recursion for " + m.to_string() + " at e = " + e.to_string());
    total += (p_x * p_s).shifted(shift);
  }
  if (cache) cache->store(key, total);
  return total;
}

namespace {

using Word = std::uint64_t;

// Subspace of F_p^ambient in reduced row echelon form.
struct Subspace {
  int ambient = 0;
  std::vector<int> pivots;
  std::vector<Word> rows;  // pivots.size() x ambient

  Word at(int r, int c) const { return rows[static_cast<std::size_t>(r) * ambient + c]; }

  bool contains(const std::vector<Word>& v, Word p) const {
    std::vector<Word> residual(v);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Word coeff = v[pivots[r]];
      if (coeff == 0) continue;
      for (int c = 0; c < ambient; ++c) residual[c] = (residual[c] + (p - coeff) * at(static_cast<int>(r), c)) % p;
    }
    return std::all_of(residual.begin(), residual.end(), [](Word x) { return x == 0; });
  }
};

// Calls visit(pivots, free_positions) for each pivot set of a k-subset of {0..d-1}.
void for_each_pivot_pattern(int d, int k, const std::function<void(const std::vector<int>&, const std::vector<std::pair<int, int>>&)>& visit) {
  std::vector<int> pivots;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pivots.size()) == k) {
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < d; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      visit(pivots, free);
      return;
    }
    for (int c = start; c < d; ++c) {
      pivots.push_back(c);
      rec(c + 1);
      pivots.pop_back();
    }
  };
  rec(0);
}

// Number of k-dimensional subspaces of F_p^d, summed block by block over echelon patterns.
std::uint64_t subspace_count(int d, int k, Word p) {
  if (k < 0 || k > d) return 0;
  std::uint64_t total = 0;
  for_each_pivot_pattern(d, k, [&](const std::vector<int>&, const std::vector<std::pair<int, int>>& free) {
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < free.size(); ++i)
      ensure(!__builtin_mul_overflow(block, p, &block), "subspace count overflows 64 bits");
    ensure(!__builtin_add_overflow(total, block, &total), "subspace count overflows 64 bits");
  });
  return total;
}

std::vector<Subspace> all_subspaces(int d, int k, Word p) {
  std::vector<Subspace> out;
  if (k < 0 || k > d) return out;
  for_each_pivot_pattern(d, k, [&](const std::vector<int>& pivots, const std::vector<std::pair<int, int>>& free) {
    std::vector<Word> digits(free.size(), 0);
    while (true) {
      Subspace s{d, pivots, std::vector<Word>(static_cast<std::size_t>(k) * d, 0)};
      for (int r = 0; r < k; ++r) s.rows[static_cast<std::size_t>(r) * d + pivots[r]] = 1;
      for (std::size_t j = 0; j < free.size(); ++j)
        s.rows[static_cast<std::size_t>(free[j].first) * d + free[j].second] = digits[j];
      out.push_back(std::move(s));
      std::size_t j = 0;
      while (j < digits.size() && digits[j] == p - 1) digits[j++] = 0;
      if (j == digits.size()) break;
      ++digits[j];
    }
  });
  return out;
}

Word reduce(const Rational& x, Word p) {
  const mpz_class num = x.get_num() % static_cast<unsigned long>(p);
  const mpz_class den = x.get_den() % static_cast<unsigned long>(p);
  ensure(den != 0, "matrix entry not defined over F_p");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
  mpz_class r = (num * inv) % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

struct ModRep {
  std::vector<int> dims;
  std::vector<std::vector<Word>> maps;  // row-major, edge i at maps[i-1]
  std::vector<bool> nonzero;
};

ModRep reduce_rep(const ExplicitRep& rep, Word p) {
  ModRep out{rep.dims, {}, {}};
  for (const auto& m : rep.maps) {
    std::vector<Word> a(static_cast<std::size_t>(m.rows()) * m.cols());
    bool nz = false;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        a[static_cast<std::size_t>(r) * m.cols() + c] = reduce(m(r, c), p);
        nz |= a[static_cast<std::size_t>(r) * m.cols() + c] != 0;
      }
    out.maps.push_back(std::move(a));
    out.nonzero.push_back(nz);
  }
  return out;
}

// Images of the basis rows of `u` under a (rows x cols) matrix.
std::vector<std::vector<Word>> image_rows(const std::vector<Word>& a, int rows, int cols, const Subspace& u, Word p) {
  std::vector<std::vector<Word>> out;
  for (std::size_t r = 0; r < u.pivots.size(); ++r) {
    std::vector<Word> v(rows, 0);
    for (int i = 0; i < rows; ++i) {
      Word s = 0;
      for (int j = 0; j < cols; ++j) s = (s + a[static_cast<std::size_t>(i) * cols + j] * u.at(static_cast<int>(r), j)) % p;
      v[i] = s;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Maximal runs [lo, hi] of vertices joined by edges with nonzero matrices.
std::vector<std::pair<int, int>> components(const ModRep& rep, int n) {
  std::vector<std::pair<int, int>> out;
  int lo = 1;
  for (int v = 1; v <= n; ++v)
    if (v == n || !rep.nonzero[v - 1]) {
      out.emplace_back(lo, v);
      lo = v + 1;
    }
  return out;
}

}  // namespace

double point_count_cost(const TypeAQuiver& q, const RepClass& m, const DimVector& e, std::uint32_t p) {
  const int n = q.vertex_count();
  const DimVector d = dim_of(q, m);
  if (e.size() != n) throw InvalidArgument("point_count: dimension vector length mismatch");
  if (!e.leq(d)) return 0;
  const ModRep rep = reduce_rep(explicit_of(q, m), p);
  double cost = 0;
  for (const auto& [lo, hi] : components(rep, n)) {
    if (lo == hi) continue;
    for (int v = lo; v <= hi; ++v) {
      const double here = static_cast<double>(subspace_count(d.entry(v), e.entry(v), p));
      cost += here;
      if (v < hi) cost += here * static_cast<double>(subspace_count(d.entry(v + 1), e.entry(v + 1), p));
    }
  }
  return cost;
}

std::uint64_t point_count(const TypeAQuiver& q, const RepClass& m, const DimVector& e, std::uint32_t p) {
  const int n = q.vertex_count();
  if (e.size() != n) throw InvalidArgument("point_count: dimension vector length mismatch");
  if (p < 2) throw InvalidArgument("point_count: p must be prime");
  for (std::uint32_t k = 2; static_cast<std::uint64_t>(k) * k <= p; ++k)
    if (p % k == 0) throw InvalidArgument("point_count: p must be prime");
  if (p > (1u << 20)) throw InvalidArgument("point_count: prime too large");
  const DimVector d = dim_of(q, m);
  if (!e.leq(d)) return 0;

  const ModRep rep = reduce_rep(explicit_of(q, m), p);
  std::uint64_t total = 1;
  for (const auto& [lo, hi] : components(rep, n)) {
    std::uint64_t count = 0;
    if (lo == hi) {
      count = subspace_count(d.entry(lo), e.entry(lo), p);
    } else {
      // Transfer along the run: weight[t] counts compatible choices on lo..v ending in t.
      std::vector<Subspace> prev = all_subspaces(d.entry(lo), e.entry(lo), p);
      std::vector<std::uint64_t> weight(prev.size(), 1);
      for (int v = lo; v < hi; ++v) {
        std::vector<Subspace> next = all_subspaces(d.entry(v + 1), e.entry(v + 1), p);
        std::vector<std::uint64_t> next_weight(next.size(), 0);
        const auto& a = rep.maps[v - 1];
        const bool forward = q.edge(v) == Orientation::Forward;
        if (forward) {
          // a: d_{v+1} x d_v, need a(U_v) inside U_{v+1}
          for (std::size_t s = 0; s < prev.size(); ++s) {
            if (weight[s] == 0) continue;
            const auto img = image_rows(a, d.entry(v + 1), d.entry(v), prev[s], p);
            for (std::size_t t = 0; t < next.size(); ++t)
              if (std::all_of(img.begin(), img.end(), [&](const auto& w) { return next[t].contains(w, p); }))
                next_weight[t] += weight[s];
          }
        } else {
          // a: d_v x d_{v+1}, need a(U_{v+1}) inside U_v
          for (std::size_t t = 0; t < next.size(); ++t) {
            const auto img = image_rows(a, d.entry(v), d.entry(v + 1), next[t], p);
            for (std::size_t s = 0; s < prev.size(); ++s)
              if (weight[s] != 0 && std::all_of(img.begin(), img.end(), [&](const auto& w) { return prev[s].contains(w, p); }))
                next_weight[t] += weight[s];
          }
        }
        prev = std::move(next);
        weight = std::move(next_weight);
      }
      for (auto w : weight) count += w;
    }
    ensure(!__builtin_mul_overflow(total, count, &total), "point count overflows 64 bits");
  }
  return total;
}

std::vector<std::uint32_t> first_primes(int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 2; static_cast<int>(out.size()) < k; ++c)
    if (std::all_of(out.begin(), out.end(), [&](std::uint32_t p) { return c % p != 0; })) out.push_back(c);
  return out;
}

PoincarePoly betti_oracle(const TypeAQuiver& q, const RepClass& m, const DimVector& e, const OracleOptions& options) {
  const DimVector d = dim_of(q, m);
  if (e.size() != q.vertex_count()) throw InvalidArgument("betti_oracle: dimension vector length mismatch");
  if (!e.leq(d)) return {};
  int degree_bound = 0;
  for (int v = 1; v <= d.size(); ++v) degree_bound += e.entry(v) * (d.entry(v) - e.entry(v));

  const auto primes = first_primes(degree_bound + 2);
  const double cost = point_count_cost(q, m, e, primes.back());
  if (cost > options.budget)
    throw InvalidArgument("betti_oracle: enumeration cost " + std::to_string(cost) + " exceeds budget for " + m.to_string() +
                          " at e = " + e.to_string());

  // One independent count per prime, the last one being the witness.
  const auto policy = std::thread::hardware_concurrency() > 1 ? std::launch::async : std::launch::deferred;
  std::vector<std::future<std::uint64_t>> pending;
  for (std::uint32_t p : primes) pending.push_back(std::async(policy, [&q, &m, &e, p] { return point_count(q, m, e, p); }));
  std::vector<std::uint64_t> counts;
  for (auto& f : pending) counts.push_back(f.get());

  std::vector<Rational> xs, ys;
  for (int k = 0; k <= degree_bound; ++k) {
    xs.emplace_back(static_cast<unsigned long>(primes[k]));
    ys.emplace_back(mpz_class(static_cast<unsigned long>(counts[k])));
  }

  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rational> dd = ys;
  for (int level = 1; level <= degree_bound; ++level)
    for (int k = degree_bound; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
  std::vector<Rational> coeffs(degree_bound + 1, Rational(0));
  for (int k = degree_bound; k >= 0; --k) {
    // coeffs <- coeffs * (x - xs[k]) + dd[k]
    std::vector<Rational> next(degree_bound + 1, Rational(0));
    for (int j = 0; j <= degree_bound; ++j) {
      if (coeffs[j] == 0) continue;
      if (j + 1 <= degree_bound) next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[k];
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }

  std::vector<std::int64_t> ints;
  for (const auto& c : coeffs) {
    ensure(c.get_den() == 1, "point counts of " + m.to_string() + " at e = " + e.to_string() + " interpolate to a non-integral polynomial");
    ensure(c >= 0, "point counts of " + m.to_string() + " at e = " + e.to_string() + " give a negative Betti number");
    ensure(c.get_num().fits_slong_p(), "Betti number too large");
    ints.push_back(c.get_num().get_si());
  }
  PoincarePoly poly(std::move(ints));
  const std::uint32_t witness = primes.back();
  ensure(poly.evaluate(mpz_class(static_cast<unsigned long>(witness))) ==
             mpz_class(static_cast<unsigned long>(counts.back())),
         "witness prime disagrees with the interpolated polynomial for " + m.to_string() + " at e = " + e.to_string());
  return poly;
}

PoincarePoly gaussian_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  // [n,k] = [n-1,k-1] + q^k [n-1,k], tabulated row by row.
  std::vector<PoincarePoly> row{PoincarePoly::one()};
  for (int m = 1; m <= n; ++m) {
    std::vector<PoincarePoly> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      if (j >= 1) next[j] += row[j - 1];
      if (j <= m - 1) next[j] += row[j].shifted(j);
    }
    row = std::move(next);
  }
  return row[k];
}

PoincarePoly grassmannian_product(const DimVector& d, const DimVector& e) {
  if (d.size() != e.size()) throw InvalidArgument("grassmannian_product: length mismatch");
  PoincarePoly p = PoincarePoly::one();
  for (int v = 1; v <= d.size(); ++v) p = p * gaussian_binomial(d.entry(v), e.entry(v));
  return p;
}

std::vector<StratumRecord> strata_table(const BongartzData& bd, const DimVector& e, BettiCache* cache) {
  const TypeAQuiver& q = bd.quiver;
  const RepClass x = bd.x();
  const RepClass s = bd.s();
  const DimVector dim_x = dim_of(q, x);
  const DimVector dim_sx = dim_of(q, bd.s_x);
  if (e.size() != q.vertex_count()) throw InvalidArgument("strata_table: dimension vector length mismatch");

  std::vector<StratumRecord> out;
  for (const auto& f : sub_dimension_vectors(e)) {
    const DimVector g = e - f;
    const PoincarePoly p_x = betti_recursion(q, x, f, cache);
    const PoincarePoly p_s = betti_recursion(q, s, g, cache);
    PoincarePoly closed;
    const auto g_minus_s = g.signed_difference(dim_sx);
    if (std::all_of(g_minus_s.begin(), g_minus_s.end(), [](int v) { return v >= 0; }))
      closed = betti_recursion(q, bd.x_s, f, cache) * betti_recursion(q, bd.s_mod, DimVector(g_minus_s), cache);
    const PoincarePoly open = p_x * p_s - closed;
    ensure(open.nonnegative(), "complement of the boundary locus has negative Betti numbers at f = " + f.to_string() +
                                   ", g = " + g.to_string());
    // <g, dim X - f>; dim X - f may have negative entries.
    int pairing = 0;
    {
      const auto diff = dim_x.signed_difference(f);
      for (int v = 1; v <= q.vertex_count(); ++v) pairing += g.entry(v) * diff[v - 1];
      for (int k = 1; k < q.vertex_count(); ++k) pairing -= g.entry(q.edge_source(k)) * diff[q.edge_target(k) - 1];
    }
    for (int i = 0; i <= 1; ++i) {
      StratumRecord r{f, g, i, 0, i == 0 ? open : closed};
      if (!r.base.is_zero()) {
        r.shift = pairing + i;
        ensure(r.shift >= 0, "negative affine-bundle rank on a nonempty stratum at f = " + f.to_string() + ", g = " +
                                 g.to_string() + ", i = " + std::to_string(i));
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

PoincarePoly strata_sum(const std::vector<StratumRecord>& records, std::optional<int> i) {
  PoincarePoly total;
  for (const auto& r : records)
    if (!i || r.i == *i) total += r.base.shifted(r.shift);
  return total;
}

}  // namespace quivgr
