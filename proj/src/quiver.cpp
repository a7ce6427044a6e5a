#include "quivgr/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "quivgr/error.hpp"

namespace quivgr {

TypeAQuiver::TypeAQuiver(int n, std::vector<Orientation> orientation)
    : n_(n), orientation_(std::move(orientation)) {
  if (n_ < 1) throw InvalidArgument("a type-A quiver needs at least one vertex");
  if (static_cast<int>(orientation_.size()) != n_ - 1)
    throw InvalidArgument("A" + std::to_string(n_) + " needs exactly " + std::to_string(n_ - 1) +
                          " orientation flags, got " + std::to_string(orientation_.size()));
}

TypeAQuiver TypeAQuiver::equioriented(int n) {
  return TypeAQuiver(n, std::vector<Orientation>(n > 0 ? n - 1 : 0, Orientation::Forward));
}

std::vector<TypeAQuiver> TypeAQuiver::all_orientations(int n) {
  std::vector<TypeAQuiver> out;
  const int edges = n - 1;
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    std::vector<Orientation> o(edges);
    // Highest bit is the first flag so that the list is sorted by flag string.
    for (int i = 0; i < edges; ++i)
      o[i] = (mask >> (edges - 1 - i)) & 1u ? Orientation::Backward : Orientation::Forward;
    out.emplace_back(n, std::move(o));
  }
  return out;
}

std::string TypeAQuiver::to_string() const {
  std::string s = "A" + std::to_string(n_) + ":";
  for (auto o : orientation_) s += (o == Orientation::Forward ? 'F' : 'B');
  return s;
}

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int x : entries_)
    if (x < 0) throw InvalidArgument("dimension vector entries must be non-negative");
}

int DimVector::total() const {
  int t = 0;
  for (int x : entries_) t += x;
  return t;
}

bool DimVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

bool DimVector::leq(const DimVector& other) const {
  if (size() != other.size()) throw InvalidArgument("dimension vector length mismatch");
  for (int i = 0; i < size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& other) const {
  if (size() != other.size()) throw InvalidArgument("dimension vector length mismatch");
  std::vector<int> s(entries_);
  for (int i = 0; i < size(); ++i) s[i] += other.entries_[i];
  return DimVector(std::move(s));
}

DimVector DimVector::operator-(const DimVector& other) const {
  if (size() != other.size()) throw InvalidArgument("dimension vector length mismatch");
  std::vector<int> s(entries_);
  for (int i = 0; i < size(); ++i) {
    s[i] -= other.entries_[i];
    if (s[i] < 0) throw InvalidArgument("dimension vector difference " + to_string() + " - " + other.to_string() + " is negative");
  }
  return DimVector(std::move(s));
}

std::vector<int> DimVector::signed_difference(const DimVector& other) const {
  if (size() != other.size()) throw InvalidArgument("dimension vector length mismatch");
  std::vector<int> s(entries_);
  for (int i = 0; i < size(); ++i) s[i] -= other.entries_[i];
  return s;
}

std::string DimVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

std::vector<DimVector> sub_dimension_vectors(const DimVector& d) {
  std::vector<DimVector> out;
  std::vector<int> e(d.size(), 0);
  while (true) {
    out.emplace_back(e);
    int i = d.size() - 1;
    while (i >= 0 && e[i] == d.entries()[i]) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
  return out;
}

DimVector Interval::indicator(int n) const {
  std::vector<int> v(n, 0);
  for (int i = a; i <= b; ++i) v.at(i - 1) = 1;
  return DimVector(std::move(v));
}

std::string Interval::to_string() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

std::vector<Interval> intervals_of(const TypeAQuiver& q) {
  std::vector<Interval> out;
  const int n = q.vertex_count();
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) out.push_back({a, b});
  return out;
}

RepClass::RepClass(std::initializer_list<Summand> summands) {
  for (const auto& s : summands) add(s.interval, s.multiplicity);
}

RepClass::RepClass(const std::vector<Interval>& copies) {
  for (const auto& u : copies) add(u);
}

void RepClass::add(Interval u, int multiplicity) {
  if (u.a < 1 || u.a > u.b) throw InvalidArgument("invalid interval " + u.to_string());
  if (multiplicity <= 0) throw InvalidArgument("multiplicity must be positive");
  auto it = std::lower_bound(summands_.begin(), summands_.end(), u,
                             [](const Summand& s, const Interval& v) { return s.interval < v; });
  if (it != summands_.end() && it->interval == u)
    it->multiplicity += multiplicity;
  else
    summands_.insert(it, Summand{u, multiplicity});
}

int RepClass::multiplicity(Interval u) const {
  for (const auto& s : summands_)
    if (s.interval == u) return s.multiplicity;
  return 0;
}

int RepClass::copy_count() const {
  int c = 0;
  for (const auto& s : summands_) c += s.multiplicity;
  return c;
}

std::vector<Interval> RepClass::copies() const {
  std::vector<Interval> out;
  for (const auto& s : summands_) out.insert(out.end(), s.multiplicity, s.interval);
  return out;
}

RepClass RepClass::operator+(const RepClass& other) const {
  RepClass r = *this;
  for (const auto& s : other.summands_) r.add(s.interval, s.multiplicity);
  return r;
}

RepClass RepClass::operator-(const RepClass& other) const {
  if (!contains(other)) throw InvalidArgument("multiset difference: " + other.to_string() + " not contained in " + to_string());
  RepClass r;
  for (const auto& s : summands_) {
    const int left = s.multiplicity - other.multiplicity(s.interval);
    if (left > 0) r.summands_.push_back({s.interval, left});
  }
  return r;
}

RepClass RepClass::intersection(const RepClass& other) const {
  RepClass r;
  for (const auto& s : summands_) {
    const int k = std::min(s.multiplicity, other.multiplicity(s.interval));
    if (k > 0) r.summands_.push_back({s.interval, k});
  }
  return r;
}

bool RepClass::contains(const RepClass& other) const {
  return std::all_of(other.summands_.begin(), other.summands_.end(),
                     [&](const Summand& s) { return multiplicity(s.interval) >= s.multiplicity; });
}

std::string RepClass::to_string() const {
  std::string s;
  for (const auto& sm : summands_) {
    if (!s.empty()) s += ',';
    s += sm.interval.to_string();
    if (sm.multiplicity > 1) s += "x" + std::to_string(sm.multiplicity);
  }
  return s;
}

std::strong_ordering operator<=>(const RepClass& x, const RepClass& y) {
  const auto cx = x.copies();
  const auto cy = y.copies();
  return std::lexicographical_compare_three_way(cx.begin(), cx.end(), cy.begin(), cy.end());
}

DimVector dim_of(const TypeAQuiver& q, const RepClass& m) {
  const int n = q.vertex_count();
  std::vector<int> d(n, 0);
  for (const auto& s : m.summands()) {
    if (s.interval.b > n) throw InvalidArgument("interval " + s.interval.to_string() + " exceeds " + q.to_string());
    for (int v = s.interval.a; v <= s.interval.b; ++v) d[v - 1] += s.multiplicity;
  }
  return DimVector(std::move(d));
}

std::vector<RepClass> enumerate_rep_classes(const TypeAQuiver& q, const DimVector& d) {
  if (d.size() != q.vertex_count()) throw InvalidArgument("dimension vector length does not match the quiver");
  const auto intervals = intervals_of(q);
  std::vector<RepClass> out;
  std::vector<int> remaining = d.entries();
  std::vector<Interval> chosen;

  // Copies are chosen in non-decreasing interval order, so each multiset
  // is produced once and in lexicographic order.
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    int first = -1;
    for (int v = 0; v < static_cast<int>(remaining.size()); ++v)
      if (remaining[v] > 0) {
        first = v + 1;
        break;
      }
    if (first < 0) {
      out.emplace_back(chosen);
      return;
    }
    for (std::size_t k = start; k < intervals.size(); ++k) {
      const Interval u = intervals[k];
      // Later intervals start at or after u.a; vertex `first` must be covered now.
      if (u.a > first) break;
      if (u.a < first) continue;
      bool fits = true;
      for (int v = u.a; v <= u.b; ++v)
        if (remaining[v - 1] == 0) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int v = u.a; v <= u.b; ++v) --remaining[v - 1];
      chosen.push_back(u);
      dfs(k);
      chosen.pop_back();
      for (int v = u.a; v <= u.b; ++v) ++remaining[v - 1];
    }
  };
  dfs(0);
  return out;
}

bool is_semisimple(const RepClass& m) {
  return std::all_of(m.summands().begin(), m.summands().end(),
                     [](const RepClass::Summand& s) { return s.interval.a == s.interval.b; });
}

RepClass semisimple_of(const DimVector& d) {
  RepClass r;
  for (int v = 1; v <= d.size(); ++v)
    if (d.entry(v) > 0) r.add({v, v}, d.entry(v));
  return r;
}

void ExplicitRep::validate() const {
  const int n = quiver.vertex_count();
  if (static_cast<int>(dims.size()) != n || static_cast<int>(maps.size()) != n - 1)
    throw InvalidArgument("explicit representation does not match " + quiver.to_string());
  for (int i = 1; i < n; ++i) {
    const auto& m = map_at(i);
    if (m.rows() != dim_at(quiver.edge_target(i)) || m.cols() != dim_at(quiver.edge_source(i)))
      throw InvalidArgument("edge " + std::to_string(i) + " matrix has the wrong shape");
  }
}

ExplicitRep explicit_of(const TypeAQuiver& q, const RepClass& m) {
  const int n = q.vertex_count();
  const auto copies = m.copies();
  // position[c][v-1]: basis index of copy c at vertex v, or -1.
  std::vector<std::vector<int>> position(copies.size(), std::vector<int>(n, -1));
  std::vector<int> dims(n, 0);
  for (std::size_t c = 0; c < copies.size(); ++c) {
    if (copies[c].b > n) throw InvalidArgument("interval " + copies[c].to_string() + " exceeds " + q.to_string());
    for (int v = copies[c].a; v <= copies[c].b; ++v) position[c][v - 1] = dims[v - 1]++;
  }
  ExplicitRep rep{q, dims, {}};
  for (int i = 1; i < n; ++i) {
    const int s = q.edge_source(i);
    const int t = q.edge_target(i);
    QMatrix a(dims[t - 1], dims[s - 1]);
    for (std::size_t c = 0; c < copies.size(); ++c)
      if (copies[c].contains(s) && copies[c].contains(t)) a(position[c][t - 1], position[c][s - 1]) = 1;
    rep.maps.push_back(std::move(a));
  }
  return rep;
}

}  // namespace quivgr
