#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library beyond the basic value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "quivgr/quiver.hpp"

namespace quivgr::oracle {

/// Every dimension vector of length n with entries summing to at most `total`.
inline std::vector<DimVector> dims_up_to(int n, int total) {
  std::vector<DimVector> out;
  std::vector<int> v(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.emplace_back(v);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      v[i] = k;
      rec(i + 1, left - k);
    }
    v[i] = 0;
  };
  rec(0, total);
  return out;
}

/// Every dimension vector with 0 <= d_v <= cap.
inline std::vector<DimVector> dims_capped(int n, int cap) {
  std::vector<DimVector> out;
  std::vector<int> v(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.emplace_back(v);
      return;
    }
    for (int k = 0; k <= cap; ++k) {
      v[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Isomorphism classes of dimension d by trying all ordered tuples of
/// intervals and deduplicating sorted tuples.
inline std::set<std::vector<std::pair<int, int>>> brute_force_classes(int n, const std::vector<int>& d) {
  std::vector<std::pair<int, int>> intervals;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) intervals.emplace_back(a, b);
  int total = 0;
  for (int x : d) total += x;
  std::set<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> tuple;
  std::vector<int> left = d;
  std::function<void()> rec = [&] {
    if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
      auto sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      out.insert(sorted);
      return;
    }
    if (static_cast<int>(tuple.size()) >= total) return;
    for (const auto& [a, b] : intervals) {
      bool fits = true;
      for (int v = a; v <= b; ++v) fits = fits && left[v - 1] > 0;
      if (!fits) continue;
      for (int v = a; v <= b; ++v) --left[v - 1];
      tuple.emplace_back(a, b);
      rec();
      tuple.pop_back();
      for (int v = a; v <= b; ++v) ++left[v - 1];
    }
  };
  rec();
  return out;
}

/// Counts e-dimensional subrepresentations of an explicit representation over
/// F_p by listing every subspace at every vertex as an explicit set of vectors.
/// Only meant for tiny cases (p^d_v small).
class NaiveSubrepCounter {
 public:
  NaiveSubrepCounter(const ExplicitRep& rep, int p) : rep_(rep), p_(p) {}

  std::uint64_t count(const DimVector& e) {
    const int n = rep_.quiver.vertex_count();
    std::vector<std::vector<std::vector<bool>>> choices(n);
    for (int v = 1; v <= n; ++v) {
      choices[v - 1] = subspaces(rep_.dim_at(v), e.entry(v));
      if (choices[v - 1].empty()) return 0;
    }
    std::vector<const std::vector<bool>*> pick(n);
    std::uint64_t total = 0;
    std::function<void(int)> rec = [&](int v) {
      if (v > n) {
        ++total;
        return;
      }
      for (const auto& s : choices[v - 1]) {
        pick[v - 1] = &s;
        if (v >= 2 && !edge_ok(v - 1, pick)) continue;
        rec(v + 1);
      }
    };
    rec(1);
    return total;
  }

 private:
  int encode(const std::vector<int>& x) const {
    int code = 0;
    for (auto it = x.rbegin(); it != x.rend(); ++it) code = code * p_ + *it;
    return code;
  }
  std::vector<int> decode(int code, int d) const {
    std::vector<int> x(d);
    for (int i = 0; i < d; ++i) {
      x[i] = code % p_;
      code /= p_;
    }
    return x;
  }
  int power(int d) const {
    int r = 1;
    for (int i = 0; i < d; ++i) r *= p_;
    return r;
  }

  // Subspaces as membership tables over all p^d vectors.
  std::vector<std::vector<bool>> subspaces(int d, int k) const {
    std::set<std::vector<bool>> found;
    const int size = power(d);
    std::vector<int> gens(k, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == k) {
        std::vector<bool> member(size, false);
        member[0] = true;
        std::vector<int> frontier{0};
        // Close {0} under adding generators.
        while (!frontier.empty()) {
          const int c = frontier.back();
          frontier.pop_back();
          for (int g : gens) {
            auto x = decode(c, d), y = decode(g, d);
            for (int t = 0; t < d; ++t) x[t] = (x[t] + y[t]) % p_;
            const int s = encode(x);
            if (!member[s]) {
              member[s] = true;
              frontier.push_back(s);
            }
          }
        }
        if (std::count(member.begin(), member.end(), true) == power(k)) found.insert(member);
        return;
      }
      for (int g = 0; g < size; ++g) {
        gens[i] = g;
        rec(i + 1);
      }
    };
    rec(0);
    return {found.begin(), found.end()};
  }

  bool edge_ok(int edge, const std::vector<const std::vector<bool>*>& pick) const {
    const int s = rep_.quiver.edge_source(edge);
    const int t = rep_.quiver.edge_target(edge);
    const QMatrix& a = rep_.map_at(edge);
    const auto& from = *pick[s - 1];
    const auto& to = *pick[t - 1];
    for (int c = 0; c < static_cast<int>(from.size()); ++c) {
      if (!from[c]) continue;
      const auto x = decode(c, rep_.dim_at(s));
      std::vector<int> y(rep_.dim_at(t), 0);
      for (int r = 0; r < a.rows(); ++r) {
        long acc = 0;
        for (int j = 0; j < a.cols(); ++j) acc += a(r, j).get_num().get_si() * x[j];
        y[r] = static_cast<int>(((acc % p_) + p_) % p_);
      }
      if (!to[encode(y)]) return false;
    }
    return true;
  }

  const ExplicitRep& rep_;
  int p_;
};

}  // namespace quivgr::oracle
