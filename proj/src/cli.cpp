#include "quivgr/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <thread>

#include "quivgr/error.hpp"
#include "quivgr/specialize.hpp"

namespace quivgr {

using nlohmann::json;

namespace {

// Reads a run of decimal digits starting at pos; throws if there is none.
int read_number(const std::string& text, std::size_t& pos, const char* what) {
  const std::size_t start = pos;
  long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1000000) throw ParseError(std::string(what) + " is too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError(std::string("expected ") + what, start);
  return static_cast<int>(value);
}

void expect(const std::string& text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

}  // namespace

TypeAQuiver parse_quiver(const std::string& text) {
  std::size_t pos = 0;
  expect(text, pos, 'A');
  const std::size_t n_pos = pos;
  const int n = read_number(text, pos, "vertex count");
  if (n < 1) throw ParseError("vertex count must be at least 1", n_pos);
  std::vector<Orientation> flags;
  if (pos < text.size()) {
    expect(text, pos, ':');
    for (; pos < text.size(); ++pos) {
      if (text[pos] == 'F')
        flags.push_back(Orientation::Forward);
      else if (text[pos] == 'B')
        flags.push_back(Orientation::Backward);
      else
        throw ParseError("orientation flag must be F or B", pos);
    }
  }
  if (static_cast<int>(flags.size()) != n - 1)
    throw ParseError("A" + std::to_string(n) + " needs " + std::to_string(n - 1) + " orientation flags, got " +
                         std::to_string(flags.size()),
                     text.size());
  return TypeAQuiver(n, flags);
}

RepClass parse_rep(const std::string& text, const TypeAQuiver& q) {
  RepClass m;
  if (text.empty()) return m;
  std::size_t pos = 0;
  while (true) {
    const std::size_t term = pos;
    expect(text, pos, '[');
    const int a = read_number(text, pos, "interval start");
    expect(text, pos, ',');
    const int b = read_number(text, pos, "interval end");
    expect(text, pos, ']');
    if (a < 1 || a > b || b > q.vertex_count())
      throw ParseError("interval [" + std::to_string(a) + "," + std::to_string(b) + "] is not inside 1.." +
                           std::to_string(q.vertex_count()),
                       term);
    int k = 1;
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      const std::size_t k_pos = pos;
      if (pos < text.size() && text[pos] == '-') throw ParseError("multiplicity must be positive", k_pos);
      k = read_number(text, pos, "multiplicity");
      if (k <= 0) throw ParseError("multiplicity must be positive", k_pos);
    }
    m.add(Interval{a, b}, k);
    if (pos == text.size()) break;
    expect(text, pos, ',');
  }
  return m;
}

DimVector parse_dim(const std::string& text, const TypeAQuiver& q) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (true) {
    entries.push_back(read_number(text, pos, "non-negative integer"));
    if (pos == text.size()) break;
    expect(text, pos, ',');
  }
  if (static_cast<int>(entries.size()) != q.vertex_count())
    throw ParseError("expected " + std::to_string(q.vertex_count()) + " entries, got " + std::to_string(entries.size()),
                     text.size());
  return DimVector(entries);
}

namespace {

json poly_json(const PoincarePoly& p) { return {{"coefficients", p.coefficients()}, {"pretty", p.to_string()}}; }

std::string cover_label(const Interval& x1, const Interval& s1) { return "(" + x1.to_string() + "," + s1.to_string() + ")"; }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

json stratum_json(const StratumRecord& r) {
  return {{"f", r.f.entries()}, {"g", r.g.entries()}, {"i", r.i}, {"shift", r.shift}, {"base", poly_json(r.base)}};
}

json cover_json(const CoverReport& r) {
  json strata = json::array();
  for (const auto& s : r.strata) strata.push_back(stratum_json(s));
  return {{"m", r.m.to_string()},
          {"n", r.n.to_string()},
          {"x1", r.x1.to_string()},
          {"s1", r.s1.to_string()},
          {"p_n", poly_json(r.p_n)},
          {"p_m", poly_json(r.p_m)},
          {"kernel", poly_json(r.kernel)},
          {"closed_strata_sum", poly_json(r.closed_sum)},
          {"monotone", r.monotone},
          {"identity_ok", r.identity_ok},
          {"strata", strata}};
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool text = false;
};

int cmd_poset(Context& ctx, const TypeAQuiver& q, const DimVector& d, const std::string& dot_path) {
  const DegenPoset poset = degeneration_poset(q, d);
  json nodes = json::array();
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    nodes.push_back({{"index", i}, {"rep", poset.nodes[i].to_string()}, {"semisimple", is_semisimple(poset.nodes[i])}});
  json covers = json::array();
  std::ostringstream dot;
  dot << "digraph degenerations {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    dot << "  n" << i << " [label=\"" << dot_escape(poset.nodes[i].to_string()) << "\"];\n";
  int status = 0;
  for (const auto& [i, j] : poset.covers) {
    json c{{"m", i}, {"n", j}};
    try {
      const BongartzData bd = bongartz_data(poset, poset.nodes[i], poset.nodes[j]);
      c["x1"] = bd.x1.to_string();
      c["s1"] = bd.s1.to_string();
      c["y1"] = bd.y1.to_string();
      dot << "  n" << i << " -> n" << j << " [label=\"" << cover_label(bd.x1, bd.s1) << "\"];\n";
    } catch (const std::exception& ex) {
      c["error"] = ex.what();
      dot << "  n" << i << " -> n" << j << ";\n";
      status = 1;
    }
    covers.push_back(c);
  }
  dot << "}\n";
  if (!dot_path.empty()) {
    std::ofstream file(dot_path);
    if (!file) throw InvalidArgument("cannot write " + dot_path);
    file << dot.str();
  }
  if (ctx.text)
    ctx.out << dot.str();
  else
    ctx.out << json{{"quiver", q.to_string()}, {"dim", d.entries()}, {"nodes", nodes}, {"covers", covers}}.dump(2) << "\n";
  return status;
}

int cmd_betti(Context& ctx, const TypeAQuiver& q, const RepClass& m, const DimVector& e, const std::string& method) {
  std::optional<PoincarePoly> rec, cnt;
  if (method != "count") rec = betti_recursion(q, m, e);
  if (method != "recursion") cnt = betti_oracle(q, m, e);
  const bool agree = !rec || !cnt || *rec == *cnt;
  const PoincarePoly& p = rec ? *rec : *cnt;
  if (ctx.text) {
    if (rec) ctx.out << "recursion: " << rec->to_string() << "\n";
    if (cnt) ctx.out << "count:     " << cnt->to_string() << "\n";
    if (!agree) ctx.out << "MISMATCH\n";
  } else {
    json j{{"quiver", q.to_string()}, {"rep", m.to_string()}, {"sub", e.entries()}, {"method", method},
           {"poincare", poly_json(p)}, {"euler_characteristic", p.at_one()}, {"agree", agree}};
    if (rec) j["recursion"] = poly_json(*rec);
    if (cnt) j["count"] = poly_json(*cnt);
    ctx.out << j.dump(2) << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_strata(Context& ctx, const TypeAQuiver& q, const RepClass& m, const RepClass& n, const DimVector& e) {
  const CoverReport r = check_cover(q, m, n, e);
  if (ctx.text) {
    ctx.out << "X1 = " << r.x1.to_string() << "  S1 = " << r.s1.to_string() << "\n";
    ctx.out << "f\tg\ti\tshift\tbase\n";
    for (const auto& s : r.strata)
      ctx.out << s.f.to_string() << "\t" << s.g.to_string() << "\t" << s.i << "\t" << s.shift << "\t" << s.base.to_string() << "\n";
    ctx.out << "P_N = " << r.p_n.to_string() << "\nP_M = " << r.p_m.to_string() << "\nkernel = " << r.kernel.to_string()
            << "\n";
  } else {
    json j = cover_json(r);
    j["quiver"] = q.to_string();
    j["sub"] = e.entries();
    ctx.out << j.dump(2) << "\n";
  }
  return r.monotone && r.identity_ok ? 0 : 1;
}

int cmd_verify(Context& ctx, const TypeAQuiver& q, const DimVector& d, unsigned jobs) {
  const VerifySummary s = verify_theorem(q, d, VerifyOptions{jobs});
  json covers = json::array();
  for (const auto& c : s.covers) {
    json j{{"m", s.nodes[c.m].to_string()}, {"n", s.nodes[c.n].to_string()}, {"bongartz_ok", c.bongartz_ok}};
    if (c.bongartz_ok) {
      j["x1"] = c.x1.to_string();
      j["s1"] = c.s1.to_string();
      j["y1"] = c.y1.to_string();
    } else {
      j["error"] = c.error;
    }
    covers.push_back(j);
  }
  json checks = json::array();
  json kernels = json::array();
  for (const auto& c : s.cover_checks) {
    json j{{"cover", c.cover}, {"sub", c.e.entries()}, {"p_n", poly_json(c.p_n)}, {"p_m", poly_json(c.p_m)},
           {"kernel", poly_json(c.kernel)}, {"monotone", c.monotone}, {"identity_ok", c.identity_ok}, {"ok", c.ok()}};
    if (!c.error.empty()) j["error"] = c.error;
    if (!c.kernel.is_zero()) kernels.push_back({{"cover", c.cover}, {"sub", c.e.entries()}, {"kernel", c.kernel.to_string()}});
    checks.push_back(j);
  }
  json node_checks = json::array();
  for (const auto& c : s.node_checks) {
    json j{{"node", s.nodes[c.node].to_string()}, {"sub", c.e.entries()}, {"p", poly_json(c.p)},
           {"bound", poly_json(c.bound)}, {"semisimple", c.semisimple}, {"ok", c.ok()}};
    if (!c.error.empty()) j["error"] = c.error;
    node_checks.push_back(j);
  }
  json subs = json::array();
  for (const auto& e : s.subs) subs.push_back(e.entries());
  if (ctx.text) {
    ctx.out << "quiver " << q.to_string() << "  dim " << d.to_string() << "\n";
    ctx.out << s.nodes.size() << " classes, " << s.covers.size() << " covers, " << s.subs.size() << " sub dimension vectors\n";
    ctx.out << s.cover_checks.size() << " cover checks, " << s.node_checks.size() << " node checks, " << s.failures
            << " failures\n";
    for (const auto& k : kernels)
      ctx.out << "  cover " << k["cover"].get<int>() << "  e=" << k["sub"].dump() << "  kernel " << k["kernel"].get<std::string>()
              << "\n";
  } else {
    ctx.out << json{{"quiver", q.to_string()},
                    {"dim", d.entries()},
                    {"sub", subs},
                    {"nodes", s.nodes.size()},
                    {"covers", covers},
                    {"checks", checks},
                    {"node_checks", node_checks},
                    {"nonzero_kernels", kernels},
                    {"failures", s.failures}}
                       .dump(2)
            << "\n";
  }
  ctx.err << "verified in " << s.seconds << " s\n";
  return s.failures == 0 ? 0 : 1;
}

int cmd_pbw(Context& ctx, int n, const std::vector<int>& tuple) {
  const PbwData pbw = pbw_rep(n, tuple);
  const TypeAQuiver q = TypeAQuiver::equioriented(n);
  const RepClass generic = RepClass::single(Interval{1, n}, n + 1);
  const SpecializationReport r = check_degeneration(q, generic, pbw.m, pbw.e);
  const bool ok = r.monotone && r.identity_ok && r.telescopes;
  if (ctx.text) {
    ctx.out << "M^i = " << pbw.m.to_string() << "\nd = " << pbw.d.to_string() << "\ne = " << pbw.e.to_string() << "\n";
    ctx.out << "P(M^i) = " << r.p_n.to_string() << "\nP(P_1^" << n + 1 << ") = " << r.p_m.to_string()
            << "\nkernel = " << r.kernel.to_string() << "\nchain length " << r.chain.size() << "\n";
  } else {
    json chain = json::array();
    for (const auto& link : r.chain) chain.push_back(cover_json(link));
    ctx.out << json{{"quiver", q.to_string()},
                    {"i", tuple},
                    {"rep", pbw.m.to_string()},
                    {"dim", pbw.d.entries()},
                    {"sub", pbw.e.entries()},
                    {"p_degenerate", poly_json(r.p_n)},
                    {"p_generic", poly_json(r.p_m)},
                    {"kernel", poly_json(r.kernel)},
                    {"euler_characteristic", r.p_n.at_one()},
                    {"monotone", r.monotone},
                    {"identity_ok", r.identity_ok},
                    {"telescopes", r.telescopes},
                    {"chain", chain}}
                       .dump(2)
            << "\n";
  }
  return ok ? 0 : 1;
}

std::vector<int> parse_tuple(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    out.push_back(read_number(text, pos, "tuple entry"));
    if (pos == text.size()) break;
    expect(text, pos, ',');
  }
  return out;
}

void emit_error(std::ostream& err, const std::string& type, const std::string& message, std::optional<std::size_t> position = {}) {
  json j{{"error", {{"type", type}, {"message", message}}}};
  if (position) j["error"]["position"] = *position;
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver Grassmannians of type A and their degenerations", "quivgr"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  unsigned jobs = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "Worker threads for verify (0: all cores)");

  std::string quiver_text, dim_text, rep_text, sub_text, m_text, n_text, dot_path, method = "both", i_text;
  int pbw_n = 0;
  auto add_quiver = [&](CLI::App* sub) { sub->add_option("--quiver", quiver_text, "e.g. A3:FB")->required(); };

  auto* poset = app.add_subcommand("poset", "Degeneration poset of a dimension vector");
  add_quiver(poset);
  poset->add_option("--dim", dim_text)->required();
  poset->add_option("--dot", dot_path, "Also write the Hasse diagram to this file");

  auto* betti = app.add_subcommand("betti", "Poincare polynomial of Gr_e(M)");
  add_quiver(betti);
  betti->add_option("--rep", rep_text)->required();
  betti->add_option("--sub", sub_text)->required();
  betti->add_option("--method", method)->check(CLI::IsMember({"recursion", "count", "both"}));

  auto* strata = app.add_subcommand("strata", "Strata of a minimal degeneration");
  add_quiver(strata);
  strata->add_option("--m", m_text, "The class covered by N")->required();
  strata->add_option("--n", n_text)->required();
  strata->add_option("--sub", sub_text)->required();

  auto* verify = app.add_subcommand("verify", "Check every cover and every e for a dimension vector");
  add_quiver(verify);
  verify->add_option("--dim", dim_text)->required();

  auto* pbw = app.add_subcommand("pbw", "PBW degenerate flag variety scenario on A_n");
  pbw->add_option("--n", pbw_n)->required();
  pbw->add_option("--i", i_text, "Strictly increasing entries in 1..n-1, comma separated");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    emit_error(err, "usage", ex.what());
    return 2;
  }

  Context ctx{out, err, format == "text"};
  try {
    if (*pbw) return cmd_pbw(ctx, pbw_n, parse_tuple(i_text));
    const TypeAQuiver q = parse_quiver(quiver_text);
    if (*poset) return cmd_poset(ctx, q, parse_dim(dim_text, q), dot_path);
    if (*betti) return cmd_betti(ctx, q, parse_rep(rep_text, q), parse_dim(sub_text, q), method);
    if (*strata) return cmd_strata(ctx, q, parse_rep(m_text, q), parse_rep(n_text, q), parse_dim(sub_text, q));
    if (*verify) return cmd_verify(ctx, q, parse_dim(dim_text, q), jobs);
  } catch (const ParseError& ex) {
    emit_error(err, "parse", ex.what(), ex.position());
    return 2;
  } catch (const InvalidArgument& ex) {
    emit_error(err, "invalid_argument", ex.what());
    return 2;
  } catch (const InvariantViolation& ex) {
    emit_error(err, "invariant_violation", ex.what());
    return 1;
  } catch (const std::exception& ex) {
    emit_error(err, "internal", ex.what());
    return 1;
  }
  return 2;
}

}  // namespace quivgr
