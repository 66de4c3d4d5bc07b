#include "ksalg/quiver.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace ksalg {

std::string EdgeLabel::to_string() const {
  static const char names[] = {'R', 'L', 'U', 'C'};
  return std::string(1, names[static_cast<int>(kind)]) + std::to_string(line);
}

EdgeLabel EdgeLabel::parse(std::string_view s) {
  if (s.size() < 2) throw ParseError(0, "bad edge label");
  EdgeLabel e;
  switch (s[0]) {
    case 'R': e.kind = Gen::R; break;
    case 'L': e.kind = Gen::L; break;
    case 'U': e.kind = Gen::U; break;
    case 'C': e.kind = Gen::C; break;
    default: throw ParseError(0, "edge label must start with R, L, U or C");
  }
  int v = 0;
  for (std::size_t p = 1; p < s.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(s[p]))) throw ParseError(p, "expected digit");
    v = v * 10 + (s[p] - '0');
    if (v > 1000) throw ParseError(p, "line index too large");
  }
  e.line = v;
  return e;
}

std::optional<IState> traverse(const IState& x, const EdgeLabel& e) {
  const int i = e.line;
  if (i < 1 || i > x.width()) return std::nullopt;
  switch (e.kind) {
    case Gen::R:
      if (!x.contains(i - 1) || x.contains(i)) return std::nullopt;
      return x.with_moved(i - 1, i);
    case Gen::L:
      if (!x.contains(i) || x.contains(i - 1)) return std::nullopt;
      return x.with_moved(i, i - 1);
    default:
      return x;
  }
}

Path::Path(IState start, std::vector<EdgeLabel> edges) : start_(start), edges_(std::move(edges)) {
  IState cur = start_;
  for (std::size_t a = 0; a < edges_.size(); ++a) {
    auto nx = traverse(cur, edges_[a]);
    if (!nx)
      throw InvalidArgument("edge " + edges_[a].to_string() + " cannot be traversed from " + cur.to_string() +
                            " (position " + std::to_string(a) + ")");
    cur = *nx;
  }
}

IState Path::end() const {
  IState cur = start_;
  for (const auto& e : edges_) cur = *traverse(cur, e);
  return cur;
}

std::vector<IState> Path::vertices() const {
  std::vector<IState> v{start_};
  for (const auto& e : edges_) v.push_back(*traverse(v.back(), e));
  return v;
}

Path Path::then(const Path& o) const {
  if (!(end() == o.start_)) throw InvalidArgument("paths do not compose: " + to_string() + " then " + o.to_string());
  std::vector<EdgeLabel> e = edges_;
  e.insert(e.end(), o.edges_.begin(), o.edges_.end());
  return Path(start_, std::move(e));
}

Path Path::prefix(std::size_t len) const {
  return Path(start_, std::vector<EdgeLabel>(edges_.begin(), edges_.begin() + static_cast<long>(len)));
}

Path Path::suffix(std::size_t from) const {
  return Path(vertices()[from], std::vector<EdgeLabel>(edges_.begin() + static_cast<long>(from), edges_.end()));
}

std::string Path::to_string() const {
  std::string s = start_.to_string() + ":";
  for (std::size_t a = 0; a < edges_.size(); ++a) {
    if (a) s += ',';
    s += edges_[a].to_string();
  }
  return s;
}

Path Path::parse(std::string_view text, int n) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(text.size(), "expected ':'");
  IState start = IState::parse(text.substr(0, colon), n);
  std::vector<EdgeLabel> edges;
  std::size_t p = colon + 1;
  while (p < text.size()) {
    auto comma = text.find(',', p);
    if (comma == std::string_view::npos) comma = text.size();
    try {
      edges.push_back(EdgeLabel::parse(text.substr(p, comma - p)));
    } catch (const ParseError& e) {
      throw ParseError(p + e.position, "bad edge label");
    }
    p = comma + 1;
    if (comma + 1 == text.size()) throw ParseError(comma, "trailing ','");
  }
  return Path(start, std::move(edges));
}

std::vector<Edge> edges_from(const AlgebraContext& ctx, const IState& x) {
  if (!ctx.admissible(x)) throw InvalidArgument("I-state " + x.to_string() + " not admissible in " + ctx.to_string());
  std::vector<Edge> out;
  const int n = ctx.n();
  for (int i = 1; i <= n; ++i)
    for (Gen g : {Gen::R, Gen::L}) {
      EdgeLabel e{g, i};
      auto t = traverse(x, e);
      if (t && ctx.admissible(*t)) out.push_back({e, *t});
    }
  for (int i = 1; i <= n; ++i) out.push_back({EdgeLabel{Gen::U, i}, x});
  for (int i = 1; i <= n; ++i)
    if (ctx.in_s(i)) out.push_back({EdgeLabel{Gen::C, i}, x});
  return out;
}

PathCounts path_counts(const Path& p) {
  const int n = p.start().width();
  PathCounts pc{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (const auto& e : p.edges()) {
    if (e.kind == Gen::R) ++pc.rho[e.line - 1];
    if (e.kind == Gen::L) ++pc.lambda[e.line - 1];
  }
  WeightVector v = weight_vector(p.start(), p.end());
  for (int i = 0; i < n; ++i)
    if (pc.rho[i] - pc.lambda[i] != v.entries[i]) throw Error("edge counts disagree with the weight vector on line " + std::to_string(i + 1));
  return pc;
}

bool path_in_context(const AlgebraContext& ctx, const Path& p) {
  if (p.start().width() != ctx.n() || p.start().size() != ctx.k()) return false;
  for (const auto& v : p.vertices())
    if (!ctx.admissible(v)) return false;
  for (const auto& e : p.edges())
    if (e.kind == Gen::C && !ctx.in_s(e.line)) return false;
  return true;
}

Element normalize(const AlgebraContext& ctx, const Path& p) {
  if (!path_in_context(ctx, p)) throw InvalidArgument("path " + p.to_string() + " is not in the quiver of " + ctx.to_string());
  Element acc = gen_idempotent(ctx, p.start());
  IState cur = p.start();
  for (const auto& e : p.edges()) {
    IState nx = *traverse(cur, e);
    BasisElement b;
    b.left = cur;
    b.right = nx;
    if (e.kind == Gen::U) b.u[e.line] = 1;
    if (e.kind == Gen::C) b.c = 1u << e.line;
    acc = multiply(acc, Element::from_terms(ctx, {b}));
    cur = nx;
    if (acc.is_zero()) break;
  }
  return acc;
}

Path canonical_path(const AlgebraContext& ctx, const IState& x, const IState& y) {
  if (!ctx.admissible(x) || !ctx.admissible(y)) throw InvalidArgument("I-state not admissible in " + ctx.to_string());
  std::vector<EdgeLabel> edges;
  for (const Move& m : canonical_moves(x, y)) edges.push_back(EdgeLabel{m.right ? Gen::R : Gen::L, m.line});
  return Path(x, std::move(edges));
}

std::string relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::UCentral: return "U central";
    case RelationKind::Loop: return "loop";
    case RelationKind::DistantCommutation: return "distant commutation";
    case RelationKind::TwoLinePass: return "two-line pass";
    case RelationKind::UVanishing: return "U vanishing";
    case RelationKind::CSquare: return "C^2 vanishing";
    case RelationKind::CCentral: return "C central";
    case RelationKind::TruncationExtra: return "truncation extra";
  }
  return "?";
}

std::string Relation::to_string() const {
  std::string s = relation_kind_name(kind) + ": ";
  for (std::size_t a = 0; a < terms.size(); ++a) {
    if (a) s += " + ";
    s += terms[a].to_string();
  }
  return s;
}

RelationFamily default_family(const AlgebraContext& ctx) {
  return ctx.flavor() == Flavor::B0 ? RelationFamily::R : RelationFamily::RtildeS;
}

namespace {

struct RelationBuilder {
  const AlgebraContext& ctx;
  std::vector<Relation> out;

  std::optional<Path> try_path(const IState& x, std::vector<EdgeLabel> labels) {
    IState cur = x;
    for (const auto& e : labels) {
      auto nx = traverse(cur, e);
      if (!nx) return std::nullopt;
      cur = *nx;
    }
    Path p(x, std::move(labels));
    if (!path_in_context(ctx, p)) return std::nullopt;
    return p;
  }
  // adds the relation only when every term is a path of the (sub)quiver
  void add(RelationKind k, const IState& x, std::vector<std::vector<EdgeLabel>> words) {
    Relation r{k, {}};
    for (auto& w : words) {
      auto p = try_path(x, std::move(w));
      if (!p) return;
      r.terms.push_back(*p);
    }
    out.push_back(std::move(r));
  }
};

}  // namespace

std::vector<Relation> relation_elements(const AlgebraContext& ctx, RelationFamily family) {
  if (ctx.flavor() == Flavor::B0 && family != RelationFamily::R)
    throw InvalidArgument("B0 is presented by the family R only");
  RelationBuilder b{ctx, {}};
  const int n = ctx.n();
  auto R = [](int i) { return EdgeLabel{Gen::R, i}; };
  auto L = [](int i) { return EdgeLabel{Gen::L, i}; };
  auto U = [](int i) { return EdgeLabel{Gen::U, i}; };
  auto C = [](int i) { return EdgeLabel{Gen::C, i}; };
  for (const auto& x : ctx.states()) {
    // U central
    for (int j = 1; j <= n; ++j) {
      for (int i = 1; i <= n; ++i) {
        b.add(RelationKind::UCentral, x, {{R(i), U(j)}, {U(j), R(i)}});
        b.add(RelationKind::UCentral, x, {{L(i), U(j)}, {U(j), L(i)}});
        if (i < j) b.add(RelationKind::UCentral, x, {{U(i), U(j)}, {U(j), U(i)}});
      }
    }
    // loop relations
    for (int i = 1; i <= n; ++i) {
      b.add(RelationKind::Loop, x, {{R(i), L(i)}, {U(i)}});
      b.add(RelationKind::Loop, x, {{L(i), R(i)}, {U(i)}});
    }
    // distant commutation
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (std::abs(i - j) <= 1) continue;
        if (i < j) {
          b.add(RelationKind::DistantCommutation, x, {{R(i), R(j)}, {R(j), R(i)}});
          b.add(RelationKind::DistantCommutation, x, {{L(i), L(j)}, {L(j), L(i)}});
        }
        b.add(RelationKind::DistantCommutation, x, {{R(i), L(j)}, {L(j), R(i)}});
      }
    if (family == RelationFamily::R) continue;
    for (int i = 1; i < n; ++i) {
      b.add(RelationKind::TwoLinePass, x, {{R(i), R(i + 1)}});
      b.add(RelationKind::TwoLinePass, x, {{L(i + 1), L(i)}});
    }
    for (int i = 1; i <= n; ++i)
      if (!x.contains(i - 1) && !x.contains(i)) b.add(RelationKind::UVanishing, x, {{U(i)}});
    if (ctx.flavor() == Flavor::Bprime && ctx.k() == n - 1) {
      std::vector<EdgeLabel> w;
      for (int i = 1; i <= n; ++i) w.push_back(U(i));
      b.add(RelationKind::TruncationExtra, x, {w});
    }
    if (family == RelationFamily::Rtilde) continue;
    for (int i = 1; i <= n; ++i) {
      if (!ctx.in_s(i)) continue;
      b.add(RelationKind::CSquare, x, {{C(i), C(i)}});
      for (int j = 1; j <= n; ++j) {
        b.add(RelationKind::CCentral, x, {{C(i), R(j)}, {R(j), C(i)}});
        b.add(RelationKind::CCentral, x, {{C(i), L(j)}, {L(j), C(i)}});
        b.add(RelationKind::CCentral, x, {{C(i), U(j)}, {U(j), C(i)}});
        if (ctx.in_s(j) && i < j) b.add(RelationKind::CCentral, x, {{C(i), C(j)}, {C(j), C(i)}});
      }
    }
  }
  return b.out;
}

PresentationReport verify_presentation(const AlgebraContext& ctx) {
  PresentationReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    if (rep.failures.size() < 50) rep.failures.push_back(s);
  };
  // (a) relations vanish
  for (const auto& r : relation_elements(ctx, default_family(ctx))) {
    ++rep.relations;
    Element sum(ctx);
    for (const auto& p : r.terms) sum += normalize(ctx, p);
    if (!sum.is_zero()) fail("relation does not vanish: " + r.to_string() + " -> " + sum.to_string());
  }
  const auto states = ctx.states();
  // (b) F(gamma_{x,y}) = f_{x,y}
  for (const auto& x : states)
    for (const auto& y : states) {
      ++rep.pairs;
      Path g = canonical_path(ctx, x, y);
      if (!path_in_context(ctx, g)) {
        fail("canonical path leaves the quiver: " + g.to_string());
        continue;
      }
      Element e = normalize(ctx, g);
      Element f = gen_f(ctx, x, y);
      if (!(e == f)) fail("F(gamma) != f for " + g.to_string() + ": " + e.to_string() + " vs " + f.to_string());
    }
  // (c) gamma of an edge's endpoints is the edge
  for (const auto& x : states)
    for (const auto& e : edges_from(ctx, x)) {
      if (e.label.kind == Gen::U || e.label.kind == Gen::C) continue;
      ++rep.edges;
      Path g = canonical_path(ctx, x, e.target);
      if (!(g == Path(x, {e.label}))) fail("gamma of edge " + Path(x, {e.label}).to_string() + " is " + g.to_string());
    }
  // (d) gamma_{x,y} gamma_{y,z} = U^(defect/2) gamma_{x,z}
  for (const auto& x : states)
    for (const auto& y : states)
      for (const auto& z : states) {
        ++rep.segments;
        Path p = canonical_path(ctx, x, y).then(canonical_path(ctx, y, z));
        BasisElement t;
        t.left = x;
        t.right = z;
        for (int i = 1; i <= ctx.n(); ++i) t.u[i] = static_cast<std::uint16_t>(subadditivity_defect(x, y, z, i) / 2);
        Element want = from_basis(ctx, t);
        Element got = normalize(ctx, p);
        if (!(got == want)) fail("segment product " + p.to_string() + " -> " + got.to_string() + ", expected " + want.to_string());
      }
  return rep;
}

std::string to_dot(const AlgebraContext& ctx) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& x : ctx.states()) os << "  \"" << x.to_string() << "\";\n";
  for (const auto& x : ctx.states())
    for (const auto& e : edges_from(ctx, x))
      os << "  \"" << x.to_string() << "\" -> \"" << e.target.to_string() << "\" [label=\"" << e.label.to_string()
         << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ksalg
