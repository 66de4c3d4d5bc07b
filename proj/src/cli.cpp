#include "ksalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <map>
#include <sstream>

#include "ksalg/formality.hpp"
#include "ksalg/homology.hpp"
#include "ksalg/quiver.hpp"
#include "ksalg/symmetry.hpp"

namespace ksalg {

namespace {

using nlohmann::json;

struct BadConfig : Error {
  using Error::Error;
};

struct RunConfig {
  int n = 1;
  int k = 0;
  std::string s_text;
  std::string flavor = "b";
  int cap = 12;
  std::uint64_t seed = 1;
  bool json = false;
  bool all_k = false;
  bool all_s = false;
  int bound = 4;
  std::vector<std::string> elements;
};

std::uint32_t parse_s(const std::string& text, int n) {
  std::uint32_t m = 0;
  std::string t;
  for (char ch : text)
    if (ch != '{' && ch != '}' && ch != ' ') t += ch;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw BadConfig("bad entry '" + item + "' in S");
    }
    if (v < 1 || v > n) throw BadConfig("S must lie in [1," + std::to_string(n) + "], got " + std::to_string(v));
    m |= 1u << v;
  }
  return m;
}

void check_sizes(const RunConfig& c) {
  if (c.n < 1 || c.n > 12) throw BadConfig("n must be in [1,12]");
  if (c.cap <= 0) throw BadConfig("--cap must be positive");
  if (!c.all_k && (c.k < 0 || c.k > c.n + 1)) throw BadConfig("k must be in [0,n+1]");
}

AlgebraContext context_of(const RunConfig& c, int k, std::uint32_t s) {
  Flavor f;
  try {
    f = parse_flavor(c.flavor);
  } catch (const Error& e) {
    throw BadConfig(e.what());
  }
  try {
    return AlgebraContext::make(c.n, k, s, f);
  } catch (const InvalidArgument& e) {
    throw BadConfig(e.what());
  }
}

AlgebraContext context_of(const RunConfig& c) {
  check_sizes(c);
  return context_of(c, c.k, parse_s(c.s_text, c.n));
}

json context_json(const AlgebraContext& ctx) {
  return json{{"n", ctx.n()}, {"k", ctx.k()}, {"S", ctx.s_list()}, {"flavor", flavor_name(ctx.flavor())}};
}

json base_json(const std::string& command) { return json{{"schema", "ks-alg/1"}, {"command", command}}; }

std::string alex_string(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

Element parse_in(const AlgebraContext& ctx, const std::string& text) {
  try {
    return parse_element(ctx, text);
  } catch (const ParseError& e) {
    throw BadConfig("cannot parse '" + text + "' at position " + std::to_string(e.position) + ": " + e.what());
  } catch (const Error& e) {
    throw BadConfig("cannot parse '" + text + "': " + e.what());
  }
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  AlgebraContext ctx = context_of(c);
  json rows = json::array();
  std::size_t total = 0;
  const auto states = ctx.states();
  const auto vecs = alex2_vectors(ctx.n(), c.cap);
  for (const auto& x : states)
    for (const auto& y : states) {
      bool any = false;
      for (const auto& a : vecs) {
        auto basis = graded_piece_basis(ctx, x, y, a);
        if (basis.empty()) continue;
        std::map<int, std::size_t> dims;
        for (const auto& b : basis) ++dims[maslov_of(ctx, b)];
        total += basis.size();
        if (!any) any = true;
        json d = json::object();
        for (auto [m, dm] : dims) d[std::to_string(m)] = dm;
        rows.push_back(json{{"x", x.to_string()}, {"y", y.to_string()}, {"alex2", a}, {"dims", d}});
        if (!c.json) {
          out << x.to_string() << " " << y.to_string() << " alex2=" << alex_string(a) << " dims";
          for (auto [m, dm] : dims) out << " " << m << ":" << dm;
          out << "\n";
        }
      }
    }
  if (c.json) {
    json j = base_json("enumerate");
    j["context"] = context_json(ctx);
    j["cap"] = c.cap;
    j["pieces"] = rows;
    j["total"] = total;
    out << j.dump(2) << "\n";
  } else {
    out << "pieces " << rows.size() << " total " << total << "\n";
  }
  return 0;
}

int cmd_multiply(const RunConfig& c, std::ostream& out) {
  AlgebraContext ctx = context_of(c);
  if (c.elements.size() != 2) throw BadConfig("multiply takes two elements");
  Element p = parse_in(ctx, c.elements[0]) * parse_in(ctx, c.elements[1]);
  if (c.json) {
    json j = base_json("multiply");
    j["context"] = context_json(ctx);
    j["result"] = p.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return 0;
}

int cmd_diff(const RunConfig& c, std::ostream& out) {
  AlgebraContext ctx = context_of(c);
  if (c.elements.size() != 1) throw BadConfig("diff takes one element");
  Element d = differential(parse_in(ctx, c.elements[0]));
  if (c.json) {
    json j = base_json("diff");
    j["context"] = context_json(ctx);
    j["result"] = d.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << d.to_string() << "\n";
  }
  return 0;
}

struct HomologyTable {
  json pieces = json::array();
  std::size_t mismatches = 0;
  std::string first_failure;
};

HomologyTable homology_table(const AlgebraContext& ctx, int cap) {
  HomologyTable t;
  const auto states = ctx.states();
  const auto vecs = alex2_vectors(ctx.n(), cap);
  for (const auto& x : states)
    for (const auto& y : states) {
      if (ctx.flavor() != Flavor::B0 && is_far(x, y)) continue;
      for (const auto& a : vecs) {
        GradedComplex cx = build_graded_complex(ctx, x, y, a);
        if (cx.strata.empty()) continue;
        auto ranks = homology_ranks(cx);
        std::map<int, std::size_t> expect;
        if (ctx.flavor() == Flavor::B0) {
          for (const auto& [m, b] : cx.strata) expect[m] = b.size();
        } else {
          for (const auto& tc : theorem_basis(ctx, x, y, a)) ++expect[tc.maslov];
        }
        for (auto it = ranks.begin(); it != ranks.end();)
          it = it->second ? std::next(it) : ranks.erase(it);
        bool match = ranks == expect;
        json r = json::object(), e = json::object();
        for (auto [m, v] : ranks) r[std::to_string(m)] = v;
        for (auto [m, v] : expect) e[std::to_string(m)] = v;
        t.pieces.push_back(json{{"x", x.to_string()}, {"y", y.to_string()}, {"alex2", a}, {"ranks", r}, {"theorem", e}, {"match", match}});
        if (!match) {
          if (!t.mismatches) t.first_failure = "homology mismatch at " + x.to_string() + "," + y.to_string() + " alex2=" + alex_string(a);
          ++t.mismatches;
        }
      }
    }
  return t;
}

int cmd_homology(const RunConfig& c, std::ostream& out) {
  AlgebraContext ctx = context_of(c);
  HomologyTable t = homology_table(ctx, c.cap);
  if (c.json) {
    json j = base_json("homology");
    j["context"] = context_json(ctx);
    j["cap"] = c.cap;
    j["pieces"] = t.pieces;
    j["all_match"] = t.mismatches == 0;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& p : t.pieces) {
      out << p["x"].get<std::string>() << " " << p["y"].get<std::string>() << " alex2=" << alex_string(p["alex2"].get<std::vector<int>>())
          << " ranks";
      for (auto& [m, v] : p["ranks"].items()) out << " " << m << ":" << v.get<std::size_t>();
      out << (p["match"].get<bool>() ? " match" : " MISMATCH") << "\n";
    }
    out << (t.mismatches ? "mismatches " + std::to_string(t.mismatches) : std::string("all pieces match")) << "\n";
  }
  return t.mismatches ? 1 : 0;
}

int cmd_massey(const RunConfig& c, std::ostream& out) {
  AlgebraContext ctx = context_of(c);
  if (c.elements.size() != 3) throw BadConfig("massey takes three elements");
  MasseySequence seq{parse_in(ctx, c.elements[0]), parse_in(ctx, c.elements[1]), parse_in(ctx, c.elements[2]), std::nullopt,
                     std::nullopt};
  HomologyCache cache(ctx);
  Admissibility adm;
  bool single = false;
  try {
    adm = check_massey_admissible3(seq, cache);
    single = single_graded_admissible3(seq, cache);
  } catch (const InvalidArgument& e) {
    throw BadConfig(e.what());
  }
  json j = base_json("massey");
  j["context"] = context_json(ctx);
  j["admissible"] = adm.admissible;
  if (!adm.admissible) j["reason"] = adm.reason;
  j["single_graded_admissible"] = single;
  if (adm.admissible) {
    MasseyResult r = massey3(seq, cache, 0);
    bool stable = massey3(seq, cache, c.seed).value == r.value;
    j["value"] = r.value.to_string();
    j["nonzero"] = r.nonzero();
    j["maslov"] = r.maslov;
    j["alex2"] = r.alex2;
    j["xi02"] = r.xi02.to_string();
    j["xi13"] = r.xi13.to_string();
    j["witness_stable"] = stable;
  }
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "admissible " << (adm.admissible ? "yes" : "no (" + adm.reason + ")") << "\n";
    out << "single-graded admissible " << (single ? "yes" : "no") << "\n";
    if (adm.admissible)
      out << "massey " << j["value"].get<std::string>() << " maslov " << j["maslov"].get<int>() << " alex2 "
          << alex_string(j["alex2"].get<std::vector<int>>()) << "\n";
  }
  return 0;
}

json verdict_json(const FormalityVerdict& v) {
  json j = context_json(v.ctx);
  j["name"] = v.ctx.to_string();
  j["formal"] = v.formal;
  j["clause"] = v.clause;
  j["certificate"] = certificate_kind_name(v.kind);
  j["verified"] = v.verified;
  if (v.massey) {
    const auto& m = *v.massey;
    j["massey"] = json{{"family", m.triple.family},
                       {"a1", m.seq.a1.to_string()},
                       {"a2", m.seq.a2.to_string()},
                       {"a3", m.seq.a3.to_string()},
                       {"paths", {m.triple.p1.to_string(), m.triple.p2.to_string(), m.triple.p3.to_string()}},
                       {"value", m.result.value.to_string()},
                       {"expected", m.expected.to_string()},
                       {"witness_stable", m.witness_stable}};
  }
  if (v.quasi_iso)
    j["quasi_iso"] = json{{"map", map_kind_name(v.quasi_iso->kind)},
                          {"ok", v.quasi_iso->ok},
                          {"pieces", v.quasi_iso->pieces},
                          {"classes", v.quasi_iso->classes},
                          {"products", v.quasi_iso->products},
                          {"failures", v.quasi_iso->failures}};
  if (v.clearance)
    j["clearance"] = json{{"ok", v.clearance->ok},
                          {"sequences", v.clearance->sequences},
                          {"admissible", v.clearance->admissible},
                          {"nonzero", v.clearance->nonzero},
                          {"failures", v.clearance->failures}};
  return j;
}

std::vector<int> ks_of(const RunConfig& c) {
  std::vector<int> ks;
  if (c.all_k)
    for (int k = 0; k <= c.n + 1; ++k) ks.push_back(k);
  else
    ks.push_back(c.k);
  return ks;
}

std::vector<std::uint32_t> ss_of(const RunConfig& c) {
  std::vector<std::uint32_t> ss;
  if (c.all_s) {
    if (parse_flavor(c.flavor) == Flavor::B0) return {0};
    for (std::uint32_t m = 0; m < (1u << c.n); ++m) ss.push_back(m << 1);
  } else {
    ss.push_back(parse_s(c.s_text, c.n));
  }
  return ss;
}

int cmd_formality(const RunConfig& c, std::ostream& out) {
  check_sizes(c);
  json table = json::array();
  bool ok = true;
  for (int k : ks_of(c))
    for (std::uint32_t s : ss_of(c)) {
      AlgebraContext ctx = context_of(c, k, s);
      VerdictOptions opt;
      opt.n_bound = c.bound;
      opt.degree_cap = c.cap;
      FormalityVerdict v = formality_verdict(ctx, opt);
      if (ctx.n() <= c.bound && !v.verified) ok = false;
      table.push_back(verdict_json(v));
      if (!c.json) {
        out << ctx.to_string() << " " << (v.formal ? "formal" : "non-formal") << " [" << v.clause << "] "
            << certificate_kind_name(v.kind) << (v.verified ? " verified" : " unverified");
        if (v.massey) out << " " << v.massey->result.value.to_string();
        out << "\n";
      }
    }
  if (c.json) {
    json j = base_json("formality");
    j["verdicts"] = table;
    out << j.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_sizes(c);
  std::string first;
  json results = json::array();
  for (int k : ks_of(c))
    for (std::uint32_t s : ss_of(c)) {
      AlgebraContext ctx = context_of(c, k, s);
      json r = context_json(ctx);
      auto note = [&](const std::string& suite, bool pass, const std::string& why) {
        r[suite] = pass;
        if (!pass && first.empty()) first = ctx.to_string() + " " + suite + ": " + why;
      };
      PresentationReport pr = verify_presentation(ctx);
      note("presentation", pr.ok, pr.failures.empty() ? "" : pr.failures[0]);
      if (ctx.flavor() != Flavor::B0) {
        bool sp = true;
        std::string why;
        for (const auto& x : ctx.states())
          for (const auto& y : ctx.states()) {
            if (is_far(x, y)) continue;
            SplittingReport rep = verify_splitting(ctx, x, y, c.cap);
            if (!rep.ok && sp) {
              sp = false;
              why = rep.failures.empty() ? "" : rep.failures[0];
            }
          }
        note("splitting", sp, why);
      }
      SymmetryReport sy = symmetry_report(ctx, 2);
      note("symmetry", sy.ok, sy.failures.empty() ? "" : sy.failures[0]);
      HomologyTable ht = homology_table(ctx, c.cap);
      note("homology", ht.mismatches == 0, ht.first_failure);
      VerdictOptions opt;
      opt.n_bound = c.bound;
      opt.degree_cap = c.cap;
      FormalityVerdict v = formality_verdict(ctx, opt);
      note("formality", ctx.n() > c.bound || v.verified, "certificate " + certificate_kind_name(v.kind) + " not verified");
      results.push_back(r);
      if (!c.json) {
        out << ctx.to_string();
        for (auto& [key, val] : r.items())
          if (val.is_boolean()) out << " " << key << "=" << (val.get<bool>() ? "pass" : "FAIL");
        out << "\n";
      }
    }
  if (c.json) {
    json j = base_json("verify");
    j["results"] = results;
    j["ok"] = first.empty();
    if (!first.empty()) j["first_failure"] = first;
    out << j.dump(2) << "\n";
  } else {
    out << (first.empty() ? "all suites pass" : "FAILED") << "\n";
  }
  if (!first.empty()) {
    err << "first failure: " << first << "\n";
    return 1;
  }
  return 0;
}

int cmd_export_dot(const RunConfig& c, std::ostream& out) {
  out << to_dot(context_of(c));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ozsvath-Szabo algebras B(n,k,S): arithmetic, homology, formality"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-n", cfg.n, "number of lines")->required();
    sub->add_option("-k", cfg.k, "I-state size");
    sub->add_option("-S", cfg.s_text, "C lines, comma separated");
    sub->add_option("--flavor", cfg.flavor, "b0, b, br, bl or bprime");
    sub->add_option("--cap", cfg.cap, "bound on the sum of alex2");
    sub->add_option("--seed", cfg.seed, "seed for reshuffled witnesses");
    sub->add_flag("--json", cfg.json, "JSON output");
  };

  auto* en = app.add_subcommand("enumerate", "dimension table per graded piece");
  common(en);
  auto* mu = app.add_subcommand("multiply", "product of two elements");
  common(mu);
  mu->add_option("elements", cfg.elements)->expected(2);
  auto* di = app.add_subcommand("diff", "differential of an element");
  common(di);
  di->add_option("element", cfg.elements)->expected(1);
  auto* ho = app.add_subcommand("homology", "homology ranks against the theorem basis");
  common(ho);
  auto* ma = app.add_subcommand("massey", "triple Massey product of three cycles");
  common(ma);
  ma->add_option("elements", cfg.elements)->expected(3);
  auto* fo = app.add_subcommand("formality", "formality verdict with certificate");
  common(fo);
  auto* ve = app.add_subcommand("verify", "run every verification suite");
  common(ve);
  auto* ex = app.add_subcommand("export-dot", "quiver in Graphviz format");
  common(ex);
  for (auto* sub : {fo, ve}) {
    sub->add_flag("--all-k", cfg.all_k, "every k in [0,n+1]");
    sub->add_flag("--all-S", cfg.all_s, "every subset S");
    sub->add_option("--bound", cfg.bound, "largest n that gets certificates");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*en) return cmd_enumerate(cfg, out);
    if (*mu) return cmd_multiply(cfg, out);
    if (*di) return cmd_diff(cfg, out);
    if (*ho) return cmd_homology(cfg, out);
    if (*ma) return cmd_massey(cfg, out);
    if (*fo) return cmd_formality(cfg, out);
    if (*ve) return cmd_verify(cfg, out, err);
    if (*ex) return cmd_export_dot(cfg, out);
  } catch (const BadConfig& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContextMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ksalg
