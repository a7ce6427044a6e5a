#include "quivgr/homalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "quivgr/error.hpp"

namespace quivgr {

namespace {

bool is_interval_indicator(const QVector& v, Interval* out) {
  int first = -1;
  int last = -1;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1) return false;
    if (first < 0) first = i;
    if (last >= 0 && last != i - 1) return false;
    last = i;
  }
  if (first < 0) return false;
  if (out) *out = {first + 1, last + 1};
  return true;
}

QVector apply(const QMatrix& m, const DimVector& d) {
  QVector out(m.rows(), Rational(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r] += m(r, c) * d.entries()[c];
  return out;
}

QVector column(const QMatrix& m, int c) {
  QVector v(m.rows());
  for (int r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

// X with basis_t * X = target_map * basis_s, i.e. the edge map written in
// the sub-bases. Columns of basis_s map into the span of basis_t.
QMatrix restrict_map(const QMatrix& target_map, const QMatrix& basis_s, const QMatrix& basis_t) {
  const QMatrix image = target_map * basis_s;
  QMatrix x(basis_t.cols(), basis_s.cols());
  for (int c = 0; c < image.cols(); ++c) {
    const auto sol = solve(basis_t, column(image, c));
    ensure(sol.has_value(), "subrepresentation is not closed under an edge map");
    for (int r = 0; r < x.rows(); ++r) x(r, c) = (*sol)[r];
  }
  return x;
}

QMatrix kernel_basis(const QMatrix& m) {
  const auto ns = nullspace(m);
  return from_columns(ns, m.cols());
}

// Image basis extended by standard vectors to a basis of the ambient space.
QMatrix complement_of(const QMatrix& basis) {
  const int n = basis.rows();
  std::vector<QVector> cols;
  QMatrix current = basis;
  for (int i = 0; i < n && current.cols() < n; ++i) {
    QMatrix trial(n, current.cols() + 1);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < current.cols(); ++c) trial(r, c) = current(r, c);
      trial(r, current.cols()) = (r == i) ? 1 : 0;
    }
    if (rank(trial) == trial.cols()) {
      current = trial;
      QVector e(n, Rational(0));
      e[i] = 1;
      cols.push_back(std::move(e));
    }
  }
  return from_columns(cols, n);
}

}  // namespace

Interval projective_at(const TypeAQuiver& q, int v) {
  int a = v;
  int b = v;
  while (b < q.vertex_count() && q.edge(b) == Orientation::Forward) ++b;
  while (a > 1 && q.edge(a - 1) == Orientation::Backward) --a;
  return {a, b};
}

Interval injective_at(const TypeAQuiver& q, int v) {
  int a = v;
  int b = v;
  while (b < q.vertex_count() && q.edge(b) == Orientation::Backward) ++b;
  while (a > 1 && q.edge(a - 1) == Orientation::Forward) --a;
  return {a, b};
}

int interval_hom_rule(const TypeAQuiver& q, Interval u, Interval v) {
  const int x = std::max(u.a, v.a);
  const int y = std::min(u.b, v.b);
  if (x > y) return 0;
  // [x,y] is a quotient of u: what u loses on either side must not map into [x,y].
  if (x > u.a && q.edge(x - 1) != Orientation::Backward) return 0;
  if (y < u.b && q.edge(y) != Orientation::Forward) return 0;
  // [x,y] is a subrepresentation of v: no arrow leaves [x,y] inside v.
  if (x > v.a && q.edge(x - 1) != Orientation::Forward) return 0;
  if (y < v.b && q.edge(y) != Orientation::Backward) return 0;
  return 1;
}

std::shared_ptr<const HomTable> HomTable::of(const TypeAQuiver& q) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const HomTable>> registry;
  const std::string key = q.to_string();
  {
    std::lock_guard lock(mutex);
    if (auto it = registry.find(key); it != registry.end()) return it->second;
  }
  auto table = std::make_shared<const HomTable>(q);
  std::lock_guard lock(mutex);
  return registry.emplace(key, std::move(table)).first->second;
}

HomTable::HomTable(const TypeAQuiver& q) : quiver_(q), intervals_(intervals_of(q)) {
  const int n = q.vertex_count();
  const int count = static_cast<int>(intervals_.size());

  std::vector<ExplicitRep> reps;
  for (const auto& u : intervals_) reps.push_back(explicit_of(q, RepClass::single(u)));
  table_.assign(count, std::vector<int>(count, 0));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const int h = hom_dim(reps[i], reps[j]);
      ensure(h == 0 || h == 1, "[U,V] > 1 between intervals " + intervals_[i].to_string() + " and " + intervals_[j].to_string());
      ensure(h == interval_hom_rule(q, intervals_[i], intervals_[j]),
             "interval Hom rule disagrees with linear algebra on " + intervals_[i].to_string() + ", " + intervals_[j].to_string());
      table_[i][j] = h;
    }
  for (int i = 0; i < count; ++i) ensure(table_[i][i] == 1, "End of an interval module is not one-dimensional");

  // Cartan matrix: column v is dim P_v.
  QMatrix cartan(n, n);
  std::vector<Interval> projectives;
  std::vector<Interval> injectives;
  for (int v = 1; v <= n; ++v) {
    const Interval p = projective_at(q, v);
    projectives.push_back(p);
    injectives.push_back(injective_at(q, v));
    for (int w = p.a; w <= p.b; ++w) cartan(w - 1, v - 1) = 1;
  }

  // Two candidate conventions; keep the first under which the transform fails
  // to produce an interval exactly on projectives (and its inverse exactly on injectives).
  const std::vector<QMatrix> candidates = {
      -(cartan.transposed() * inverse(cartan)),
      -(cartan * inverse(cartan.transposed())),
  };
  bool chosen = false;
  for (const auto& phi : candidates) {
    const QMatrix phi_inv = inverse(phi);
    std::vector<std::optional<Interval>> fwd(count);
    std::vector<std::optional<Interval>> bwd(count);
    bool ok = true;
    for (int i = 0; i < count && ok; ++i) {
      const auto& u = intervals_[i];
      const DimVector d = u.indicator(n);
      Interval t{};
      const bool proj = std::find(projectives.begin(), projectives.end(), u) != projectives.end();
      const bool inj = std::find(injectives.begin(), injectives.end(), u) != injectives.end();
      const bool fwd_ok = is_interval_indicator(apply(phi, d), &t);
      if (fwd_ok == proj) ok = false;
      if (fwd_ok) fwd[i] = t;
      const bool bwd_ok = is_interval_indicator(apply(phi_inv, d), &t);
      if (bwd_ok == inj) ok = false;
      if (bwd_ok) bwd[i] = t;
    }
    if (!ok) continue;
    coxeter_ = phi;
    tau_ = std::move(fwd);
    tau_inverse_ = std::move(bwd);
    chosen = true;
    break;
  }
  ensure(chosen, "no Coxeter convention maps non-projective intervals to intervals on " + q.to_string());
}

int HomTable::index(Interval u) const {
  const int n = quiver_.vertex_count();
  if (u.a < 1 || u.a > u.b || u.b > n) throw InvalidArgument("interval " + u.to_string() + " not on " + quiver_.to_string());
  // Intervals starting at a come after those starting at 1..a-1.
  return (u.a - 1) * n - (u.a - 1) * (u.a - 2) / 2 + (u.b - u.a);
}

int euler_form(const TypeAQuiver& q, const DimVector& d, const DimVector& e) {
  const int n = q.vertex_count();
  if (d.size() != n || e.size() != n) throw InvalidArgument("euler_form: dimension vector length mismatch");
  int sum = 0;
  for (int v = 1; v <= n; ++v) sum += d.entry(v) * e.entry(v);
  for (int i = 1; i < n; ++i) sum -= d.entry(q.edge_source(i)) * e.entry(q.edge_target(i));
  return sum;
}

namespace {

// Linear system whose null space is Hom(f, g). Unknown phi_v[r][c] sits at
// offsets[v-1] + r * f_v + c.
QMatrix intertwining_system(const ExplicitRep& f, const ExplicitRep& g, std::vector<int>& offsets) {
  if (!(f.quiver == g.quiver)) throw InvalidArgument("representations of different quivers");
  const TypeAQuiver& q = f.quiver;
  const int n = q.vertex_count();
  offsets.assign(n, 0);
  int unknowns = 0;
  for (int v = 1; v <= n; ++v) {
    offsets[v - 1] = unknowns;
    unknowns += f.dim_at(v) * g.dim_at(v);
  }
  int equations = 0;
  for (int i = 1; i < n; ++i) equations += g.dim_at(q.edge_target(i)) * f.dim_at(q.edge_source(i));

  QMatrix sys(equations, unknowns);
  int row = 0;
  for (int i = 1; i < n; ++i) {
    const int s = q.edge_source(i);
    const int t = q.edge_target(i);
    const QMatrix& fm = f.map_at(i);  // f_t x f_s
    const QMatrix& gm = g.map_at(i);  // g_t x g_s
    const int fs = f.dim_at(s), ft = f.dim_at(t), gs = g.dim_at(s), gt = g.dim_at(t);
    // (gm * phi_s - phi_t * fm)(r, c) = 0
    for (int r = 0; r < gt; ++r)
      for (int c = 0; c < fs; ++c, ++row) {
        for (int k = 0; k < gs; ++k)
          if (gm(r, k) != 0) sys(row, offsets[s - 1] + k * fs + c) += gm(r, k);
        for (int k = 0; k < ft; ++k)
          if (fm(k, c) != 0) sys(row, offsets[t - 1] + r * ft + k) -= fm(k, c);
      }
  }
  return sys;
}

}  // namespace

int hom_dim(const ExplicitRep& f, const ExplicitRep& g) {
  std::vector<int> offsets;
  const QMatrix sys = intertwining_system(f, g, offsets);
  return sys.cols() - rank(sys);
}

int hom_dim(const TypeAQuiver& q, const RepClass& m, const RepClass& n) {
  const auto table = HomTable::of(q);
  int sum = 0;
  for (const auto& a : m.summands())
    for (const auto& b : n.summands()) sum += a.multiplicity * b.multiplicity * (*table)(a.interval, b.interval);
  return sum;
}

int ext_dim(const TypeAQuiver& q, const RepClass& m, const RepClass& n) {
  const int e = hom_dim(q, m, n) - euler_form(q, dim_of(q, m), dim_of(q, n));
  ensure(e >= 0, "negative Ext dimension between " + m.to_string() + " and " + n.to_string());
  return e;
}

std::optional<Interval> tau(const TypeAQuiver& q, Interval u, TauDirection direction) {
  const auto table = HomTable::of(q);
  return direction == TauDirection::Forward ? table->tau(u) : table->tau_inverse(u);
}

RepClass tau_of(const TypeAQuiver& q, const RepClass& m, TauDirection direction) {
  RepClass out;
  for (const auto& s : m.summands())
    if (auto t = tau(q, s.interval, direction)) out.add(*t, s.multiplicity);
  return out;
}

RepClass iso_identify(const ExplicitRep& f) {
  f.validate();
  const TypeAQuiver& q = f.quiver;
  const auto table = HomTable::of(q);
  const auto& intervals = table->intervals();
  const int count = static_cast<int>(intervals.size());
  QMatrix h(count, count);
  QVector counts(count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) h(i, j) = (*table)(intervals[i], intervals[j]);
    counts[i] = hom_dim(explicit_of(q, RepClass::single(intervals[i])), f);
  }
  const auto mult = solve(h, counts);
  ensure(mult.has_value(), "Hom counts admit no decomposition");
  RepClass m;
  for (int j = 0; j < count; ++j) {
    const Rational& x = (*mult)[j];
    ensure(x.get_den() == 1 && x >= 0, "non-integral or negative multiplicity while identifying a representation");
    if (x > 0) m.add(intervals[j], static_cast<int>(x.get_num().get_si()));
  }
  return m;
}

bool ExplicitHom::intertwines() const {
  const TypeAQuiver& q = source.quiver;
  for (int i = 1; i < q.vertex_count(); ++i) {
    const int s = q.edge_source(i);
    const int t = q.edge_target(i);
    if (!(target.map_at(i) * components[s - 1] == components[t - 1] * source.map_at(i))) return false;
  }
  return true;
}

bool ExplicitHom::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const QMatrix& m) { return m.is_zero(); });
}

std::vector<ExplicitHom> hom_basis(const ExplicitRep& f, const ExplicitRep& g) {
  std::vector<int> offsets;
  const QMatrix sys = intertwining_system(f, g, offsets);
  std::vector<ExplicitHom> basis;
  const int n = f.quiver.vertex_count();
  for (const auto& v : nullspace(sys)) {
    ExplicitHom h{f, g, {}};
    for (int x = 1; x <= n; ++x) {
      QMatrix phi(g.dim_at(x), f.dim_at(x));
      for (int r = 0; r < phi.rows(); ++r)
        for (int c = 0; c < phi.cols(); ++c) phi(r, c) = v[offsets[x - 1] + r * phi.cols() + c];
      h.components.push_back(std::move(phi));
    }
    basis.push_back(std::move(h));
  }
  return basis;
}

ExplicitHom linear_combination(const std::vector<ExplicitHom>& basis, const std::vector<Rational>& coefficients) {
  if (basis.empty() || basis.size() != coefficients.size()) throw InvalidArgument("linear_combination: size mismatch");
  ExplicitHom h = basis.front();
  for (std::size_t v = 0; v < h.components.size(); ++v) {
    QMatrix& m = h.components[v];
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        Rational x = 0;
        for (std::size_t k = 0; k < basis.size(); ++k) x += coefficients[k] * basis[k].components[v](r, c);
        m(r, c) = x;
      }
  }
  return h;
}

ExplicitRep subquotient(const ExplicitHom& h, Subquotient which) {
  const TypeAQuiver& q = h.source.quiver;
  const int n = q.vertex_count();
  ensure(h.intertwines(), "subquotient of a map that is not a homomorphism");

  std::vector<QMatrix> bases(n);
  std::vector<QMatrix> complements(n);
  for (int v = 1; v <= n; ++v) {
    const QMatrix& phi = h.components[v - 1];
    if (which == Subquotient::Kernel) {
      bases[v - 1] = kernel_basis(phi);
    } else {
      bases[v - 1] = column_basis(phi);
      if (which == Subquotient::Cokernel) complements[v - 1] = complement_of(bases[v - 1]);
    }
  }

  ExplicitRep out{q, std::vector<int>(n, 0), {}};
  for (int v = 1; v <= n; ++v)
    out.dims[v - 1] = which == Subquotient::Cokernel ? complements[v - 1].cols() : bases[v - 1].cols();

  for (int i = 1; i < n; ++i) {
    const int s = q.edge_source(i);
    const int t = q.edge_target(i);
    if (which == Subquotient::Kernel) {
      out.maps.push_back(restrict_map(h.source.map_at(i), bases[s - 1], bases[t - 1]));
    } else if (which == Subquotient::Image) {
      out.maps.push_back(restrict_map(h.target.map_at(i), bases[s - 1], bases[t - 1]));
    } else {
      // Coordinates in [image | complement] at t; keep the complement part.
      const QMatrix& img_t = bases[t - 1];
      const QMatrix& comp_t = complements[t - 1];
      QMatrix full(img_t.rows(), img_t.cols() + comp_t.cols());
      for (int r = 0; r < full.rows(); ++r) {
        for (int c = 0; c < img_t.cols(); ++c) full(r, c) = img_t(r, c);
        for (int c = 0; c < comp_t.cols(); ++c) full(r, img_t.cols() + c) = comp_t(r, c);
      }
      const QMatrix coords = inverse(full) * (h.target.map_at(i) * complements[s - 1]);
      QMatrix x(comp_t.cols(), complements[s - 1].cols());
      for (int r = 0; r < x.rows(); ++r)
        for (int c = 0; c < x.cols(); ++c) x(r, c) = coords(img_t.cols() + r, c);
      out.maps.push_back(std::move(x));
    }
  }
  out.validate();
  return out;
}

RepClass subquotient_class(const ExplicitHom& h, Subquotient which) { return iso_identify(subquotient(h, which)); }

namespace {

// Coefficient vectors of length k: every {0,1,-1} pattern except zero, then
// patterns over {-2..2}, then {-3..3}.
std::vector<std::vector<Rational>> coefficient_sweep(int k) {
  std::vector<std::vector<Rational>> out;
  for (int bound = 1; bound <= 3; ++bound) {
    std::vector<int> digits(k, -bound);
    while (true) {
      bool nonzero = false;
      bool uses_bound = bound == 1;
      for (int d : digits) {
        nonzero |= d != 0;
        uses_bound |= (d == bound || d == -bound);
      }
      if (nonzero && uses_bound) {
        std::vector<Rational> c;
        for (int d : digits) c.emplace_back(d);
        out.push_back(std::move(c));
      }
      int i = k - 1;
      while (i >= 0 && digits[i] == bound) digits[i--] = -bound;
      if (i < 0) break;
      ++digits[i];
    }
  }
  return out;
}

bool is_injective(const ExplicitHom& h) {
  return std::all_of(h.components.begin(), h.components.end(), [](const QMatrix& m) { return rank(m) == m.cols(); });
}

}  // namespace

RepClass middle_term(const TypeAQuiver& q, Interval x1, Interval s1) {
  static std::mutex mutex;
  static std::map<std::tuple<std::string, Interval, Interval>, RepClass> memo;
  const auto key = std::make_tuple(q.to_string(), x1, s1);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  if (ext_dim(q, RepClass::single(s1), RepClass::single(x1)) != 1)
    throw InvalidArgument("middle_term: Ext^1(" + s1.to_string() + ", " + x1.to_string() + ") is not one-dimensional");

  const RepClass split{{x1, 1}, {s1, 1}};
  const RepClass s1_class = RepClass::single(s1);
  const ExplicitRep source = explicit_of(q, RepClass::single(x1));
  const DimVector d = x1.indicator(q.vertex_count()) + s1.indicator(q.vertex_count());

  std::vector<RepClass> found;
  for (const auto& y : enumerate_rep_classes(q, d)) {
    if (y == split) continue;
    const auto basis = hom_basis(source, explicit_of(q, y));
    if (basis.empty()) continue;
    for (const auto& coeffs : coefficient_sweep(static_cast<int>(basis.size()))) {
      const ExplicitHom h = linear_combination(basis, coeffs);
      if (!is_injective(h)) continue;
      if (subquotient_class(h, Subquotient::Cokernel) == s1_class) {
        found.push_back(y);
        break;
      }
    }
  }
  ensure(found.size() == 1, "expected exactly one middle term for 0 -> " + x1.to_string() + " -> Y -> " + s1.to_string() +
                                " -> 0, found " + std::to_string(found.size()));
  std::lock_guard lock(mutex);
  memo.emplace(key, found.front());
  return found.front();
}

}  // namespace quivgr
