#include "ksalg/formality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "ksalg/symmetry.hpp"

namespace ksalg {

const HomologyPiece& HomologyCache::piece(const IState& x, const IState& y, const std::vector<int>& alex2) {
  auto key = std::make_tuple(x.bits(), y.bits(), alex2);
  auto it = pieces_.find(key);
  if (it == pieces_.end()) it = pieces_.emplace(key, std::make_unique<HomologyPiece>(ctx_, x, y, alex2)).first;
  return *it->second;
}

Homogeneous homogeneous_info(const Element& e) {
  if (e.is_zero()) throw InvalidArgument("zero element has no grading");
  const auto& t = e.terms();
  Homogeneous h{t[0].left, t[0].right, alex2_of(t[0]), maslov_of(e.context(), t[0])};
  for (const auto& b : t)
    if (!(b.left == h.left && b.right == h.right) || alex2_of(b) != h.alex2 || maslov_of(e.context(), b) != h.maslov)
      throw InvalidArgument("element " + e.to_string() + " is not homogeneous");
  return h;
}

namespace {

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

struct SeqInfo {
  Homogeneous h1, h2, h3;
};

SeqInfo info_of(const MasseySequence& s) {
  SeqInfo i{homogeneous_info(s.a1), homogeneous_info(s.a2), homogeneous_info(s.a3)};
  if (!(s.a1.context() == s.a2.context()) || !(s.a2.context() == s.a3.context()))
    throw ContextMismatch("Massey sequence mixes contexts");
  if (!(i.h1.right == i.h2.left) || !(i.h2.right == i.h3.left)) throw InvalidArgument("Massey sequence is not composable");
  for (const Element* a : {&s.a1, &s.a2, &s.a3})
    if (!differential(*a).is_zero()) throw InvalidArgument("element " + a->to_string() + " is not a cycle");
  return i;
}

}  // namespace

Admissibility check_massey_admissible3(const MasseySequence& seq, HomologyCache& cache) {
  SeqInfo s = info_of(seq);
  const auto& P02 = cache.piece(s.h1.left, s.h2.right, add(s.h1.alex2, s.h2.alex2));
  const auto& P13 = cache.piece(s.h2.left, s.h3.right, add(s.h2.alex2, s.h3.alex2));
  if (!P02.is_boundary(seq.a1 * seq.a2)) return {false, "[a1 a2] is nonzero"};
  if (!P13.is_boundary(seq.a2 * seq.a3)) return {false, "[a2 a3] is nonzero"};
  if (P02.rank(s.h1.maslov + s.h2.maslov + 1) != 0) return {false, "homology between x0 and x2 is nonzero in the shifted degree"};
  if (P13.rank(s.h2.maslov + s.h3.maslov + 1) != 0) return {false, "homology between x1 and x3 is nonzero in the shifted degree"};
  return {true, ""};
}

bool is_massey_admissible3(const MasseySequence& seq) {
  HomologyCache cache(seq.a1.context());
  return check_massey_admissible3(seq, cache).admissible;
}

namespace {

Element witness(const HomologyPiece& P, const Element& target, int m, std::mt19937_64* rng) {
  const GradedComplex& c = P.complex();
  std::vector<std::size_t> order(c.dim(m + 1));
  std::iota(order.begin(), order.end(), 0);
  if (rng) std::shuffle(order.begin(), order.end(), *rng);
  auto xi = P.solve_boundary(target, rng ? &order : nullptr);
  if (!xi) throw NoWitness("no chain bounds " + target.to_string());
  if (rng) {
    auto it = P.degrees().find(m + 1);
    if (it != P.degrees().end()) {
      BitVec v(words_for(c.dim(m + 1)), 0);
      for (const auto& row : it->second.cycles.rows)
        if ((*rng)() & 1u)
          for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= row[w];
      *xi += c.to_element(m + 1, v);
    }
  }
  return *xi;
}

}  // namespace

MasseyResult massey3(MasseySequence seq, HomologyCache& cache, std::uint64_t seed) {
  Admissibility adm = check_massey_admissible3(seq, cache);
  if (!adm.admissible) throw InvalidArgument("sequence is not Massey admissible: " + adm.reason);
  SeqInfo s = info_of(seq);
  std::mt19937_64 rng(seed);
  std::mt19937_64* r = seed ? &rng : nullptr;
  const auto& P02 = cache.piece(s.h1.left, s.h2.right, add(s.h1.alex2, s.h2.alex2));
  const auto& P13 = cache.piece(s.h2.left, s.h3.right, add(s.h2.alex2, s.h3.alex2));
  Element p12 = seq.a1 * seq.a2, p23 = seq.a2 * seq.a3;
  MasseyResult out;
  if (seq.xi02) {
    if (!(differential(*seq.xi02) == p12)) throw InvalidArgument("xi02 does not bound a1 a2");
    out.xi02 = *seq.xi02;
  } else {
    out.xi02 = witness(P02, p12, s.h1.maslov + s.h2.maslov, r);
  }
  if (seq.xi13) {
    if (!(differential(*seq.xi13) == p23)) throw InvalidArgument("xi13 does not bound a2 a3");
    out.xi13 = *seq.xi13;
  } else {
    out.xi13 = witness(P13, p23, s.h2.maslov + s.h3.maslov, r);
  }
  out.left = s.h1.left;
  out.right = s.h3.right;
  out.alex2 = add(add(s.h1.alex2, s.h2.alex2), s.h3.alex2);
  out.maslov = s.h1.maslov + s.h2.maslov + s.h3.maslov + 1;
  const auto& P03 = cache.piece(out.left, out.right, out.alex2);
  Element v = out.xi02 * seq.a3 + seq.a1 * out.xi13;
  if (!P03.is_cycle(v)) throw Error("Massey chain is not a cycle");
  out.value = P03.canonical(v);
  return out;
}

MasseyResult massey3(const MasseySequence& seq) {
  HomologyCache cache(seq.a1.context());
  return massey3(seq, cache, 0);
}

namespace {

// all vectors over `lines` (1-based) summing to total, written into a
void compositions(const std::vector<int>& lines, std::size_t at, int total, std::vector<int>& a,
                  const std::function<void()>& f) {
  if (at == lines.size()) {
    if (total == 0) f();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    a[lines[at] - 1] = v;
    compositions(lines, at + 1, total - v, a, f);
  }
  a[lines[at] - 1] = 0;
}

int single2(const AlgebraContext& ctx, const std::vector<int>& alex2) {
  int s = 0;
  for (int i = 1; i <= ctx.n(); ++i) s += ctx.in_s(i) ? -alex2[i - 1] : alex2[i - 1];
  return s;
}

bool single_piece_vanishes(HomologyCache& cache, const IState& x, const IState& y, int maslov, int s) {
  const AlgebraContext& ctx = cache.context();
  std::vector<int> in, out;
  for (int i = 1; i <= ctx.n(); ++i) (ctx.in_s(i) ? in : out).push_back(i);
  bool zero = true;
  // maslov = |c| - sum_S alex2, with |c| <= |S|
  for (int as = 0; as <= static_cast<int>(in.size()) - maslov && zero; ++as) {
    const int rest = s + as;
    if (rest < 0) continue;
    if (out.empty() && rest != 0) continue;
    std::vector<int> a(ctx.n(), 0);
    compositions(in, 0, as, a, [&] {
      compositions(out, 0, rest, a, [&] {
        if (zero && cache.piece(x, y, a).rank(maslov) != 0) zero = false;
      });
    });
  }
  return zero;
}

}  // namespace

bool single_graded_admissible3(const MasseySequence& seq, HomologyCache& cache) {
  SeqInfo s = info_of(seq);
  const AlgebraContext& ctx = cache.context();
  const auto a12 = add(s.h1.alex2, s.h2.alex2), a23 = add(s.h2.alex2, s.h3.alex2);
  if (!cache.piece(s.h1.left, s.h2.right, a12).is_boundary(seq.a1 * seq.a2)) return false;
  if (!cache.piece(s.h2.left, s.h3.right, a23).is_boundary(seq.a2 * seq.a3)) return false;
  return single_piece_vanishes(cache, s.h1.left, s.h2.right, s.h1.maslov + s.h2.maslov + 1, single2(ctx, a12)) &&
         single_piece_vanishes(cache, s.h2.left, s.h3.right, s.h2.maslov + s.h3.maslov + 1, single2(ctx, a23));
}

bool family_applies(const AlgebraContext& ctx, int family, int i) {
  const int n = ctx.n(), k = ctx.k();
  if (k < 1 || k > n - 1 || i < 1 || i > n - 1) return false;
  const bool a = ctx.in_s(i), b = ctx.in_s(i + 1);
  switch (family) {
    case 1: return a;
    case 2: return b;
    case 3: return a && !b;
    case 4: return b && !a;
  }
  return false;
}

std::optional<PathTriple> family_triple(const AlgebraContext& ctx, int family, int i, const IState& x) {
  const int n = ctx.n();
  if (family < 1 || family > 4 || i < 1 || i > n - 1) return std::nullopt;
  if (x.width() != n || x.size() != ctx.k()) return std::nullopt;
  if (x.contains(i - 1) || !x.contains(i) || x.contains(i + 1)) return std::nullopt;
  auto E = [](Gen g, int l) { return EdgeLabel{g, l}; };
  PathTriple t;
  const bool left_first = family == 1 || family == 3;
  const int j = left_first ? i : i + 1;  // line of the first two edges
  t.p1 = Path(x, {E(left_first ? Gen::L : Gen::R, j)});
  t.p2 = Path(t.p1.end(), {E(left_first ? Gen::R : Gen::L, j)});
  switch (family) {
    case 1: t.p3 = Path(x, {E(Gen::R, i + 1)}); break;
    case 2: t.p3 = Path(x, {E(Gen::L, i)}); break;
    case 3: t.p3 = Path(x, {E(Gen::U, i + 1)}); break;
    case 4: t.p3 = Path(x, {E(Gen::U, i)}); break;
  }
  t.expected = Path(x, {E(Gen::C, j), t.p3.edges()[0]});
  t.family = "family " + std::to_string(family) + " i=" + std::to_string(i);
  for (const Path* p : {&t.p1, &t.p2, &t.p3, &t.expected})
    if (!path_in_context(ctx, *p)) return std::nullopt;
  return t;
}

MasseySequence sequence_of(const AlgebraContext& ctx, const PathTriple& t) {
  return MasseySequence{normalize(ctx, t.p1), normalize(ctx, t.p2), normalize(ctx, t.p3), std::nullopt, std::nullopt};
}

MasseyCertificate check_triple(const AlgebraContext& ctx, const PathTriple& t, HomologyCache& cache, int reseeds) {
  MasseyCertificate c;
  c.triple = t;
  c.seq = sequence_of(ctx, t);
  c.expected = normalize(ctx, t.expected);
  for (const Element* a : {&c.seq.a1, &c.seq.a2, &c.seq.a3})
    if (a->is_zero() || !differential(*a).is_zero()) return c;
  if (!check_massey_admissible3(c.seq, cache).admissible) return c;
  c.result = massey3(c.seq, cache, 0);
  if (!c.result.nonzero() || c.expected.is_zero()) return c;
  const auto& P = cache.piece(c.result.left, c.result.right, c.result.alex2);
  Homogeneous he = homogeneous_info(c.expected);
  if (!(he.left == c.result.left && he.right == c.result.right && he.alex2 == c.result.alex2 && he.maslov == c.result.maslov))
    return c;
  c.verified = P.is_cycle(c.expected) && P.canonical(c.expected) == c.result.value;
  c.witness_stable = true;
  for (int s = 1; s <= reseeds; ++s)
    if (!(massey3(c.seq, cache, static_cast<std::uint64_t>(s) * 0x9E3779B97F4A7C15ull).value == c.result.value))
      c.witness_stable = false;
  return c;
}

namespace {

// ([R_l..R_2],[L_2..L_l],[U_1]) at [1,top] minus {l}
std::optional<PathTriple> extra_triple(const AlgebraContext& ctx, int top) {
  const int n = ctx.n();
  std::uint32_t s = ctx.s_mask();
  if (!s) return std::nullopt;
  const int l = __builtin_ctz(s);
  if (l < 2) return std::nullopt;
  std::vector<int> mem;
  for (int a = 1; a <= top; ++a)
    if (a != l) mem.push_back(a);
  IState x = IState::from_members(n, mem);
  if (x.size() != ctx.k()) return std::nullopt;
  std::vector<EdgeLabel> r, lft, exp;
  for (int a = l; a >= 2; --a) r.push_back({Gen::R, a});
  for (int a = 2; a <= l; ++a) lft.push_back({Gen::L, a});
  for (int a = 1; a < l; ++a) exp.push_back({Gen::U, a});
  exp.push_back({Gen::C, l});
  PathTriple t;
  t.family = "extra l=" + std::to_string(l);
  try {
    t.p1 = Path(x, r);
    t.p2 = Path(t.p1.end(), lft);
    t.p3 = Path(x, {{Gen::U, 1}});
    t.expected = Path(x, exp);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  for (const Path* p : {&t.p1, &t.p2, &t.p3, &t.expected})
    if (!path_in_context(ctx, *p)) return std::nullopt;
  return t;
}

PathTriple rho_triple(const PathTriple& t) {
  return PathTriple{"mirror of " + t.family, rho(t.p1), rho(t.p2), rho(t.p3), rho(t.expected)};
}

// (family, i) pairs suggested by the proofs; expanded over x in lex order
std::vector<std::pair<int, int>> proof_families(const AlgebraContext& ctx) {
  const int n = ctx.n(), k = ctx.k();
  std::vector<std::pair<int, int>> out;
  const auto S = ctx.s_list();
  switch (ctx.flavor()) {
    case Flavor::B:
      for (int s : S)
        if (s <= n - 1) out.push_back({1, s});
      if (ctx.in_s(n)) out.push_back({2, n - 1});
      break;
    case Flavor::Br:
      if (k <= n - 2)
        for (int s : S) {
          if (s >= 2 && s <= n - 1) out.push_back({1, s});
          if (s == n) out.push_back({2, n - 1});
        }
      break;
    case Flavor::Bprime:
      if (k <= n - 3)
        for (int s : S) {
          if (s >= 2 && s <= n - 2) out.push_back({1, s});
          if (s == n - 1 && n >= 4) out.push_back({2, n - 2});
        }
      break;
    default: break;
  }
  return out;
}

std::vector<PathTriple> expand(const AlgebraContext& ctx, const std::vector<std::pair<int, int>>& fams) {
  std::vector<PathTriple> out;
  const auto states = ctx.states();
  for (auto [f, i] : fams)
    for (const auto& x : states)
      if (auto t = family_triple(ctx, f, i, x)) out.push_back(*t);
  return out;
}

std::vector<PathTriple> proof_candidates(const AlgebraContext& ctx) {
  const int n = ctx.n(), k = ctx.k();
  if (ctx.flavor() == Flavor::Bl) {
    std::vector<PathTriple> out;
    for (const auto& t : proof_candidates(rho_context(ctx))) out.push_back(rho_triple(t));
    return out;
  }
  std::vector<PathTriple> out = expand(ctx, proof_families(ctx));
  if (ctx.flavor() == Flavor::Br && k == n - 1)
    if (auto t = extra_triple(ctx, n)) out.push_back(*t);
  if (ctx.flavor() == Flavor::Bprime && k == n - 2) {
    if (!ctx.in_s(1)) {
      if (auto t = extra_triple(ctx, n - 1)) out.push_back(*t);
    } else if (!ctx.in_s(n)) {
      if (auto t = extra_triple(rho_context(ctx), n - 1)) out.push_back(rho_triple(*t));
    }
  }
  return out;
}

}  // namespace

std::optional<MasseyCertificate> nonformal_certificate(const AlgebraContext& ctx) {
  HomologyCache cache(ctx);
  for (const auto& t : proof_candidates(ctx)) {
    MasseyCertificate c = check_triple(ctx, t, cache);
    if (c.verified) return c;
  }
  // anything from the four families
  std::vector<std::pair<int, int>> all;
  for (int f = 1; f <= 4; ++f)
    for (int i = 1; i < ctx.n(); ++i) all.push_back({f, i});
  for (const auto& t : expand(ctx, all)) {
    MasseyCertificate c = check_triple(ctx, t, cache);
    if (c.verified) return c;
  }
  return std::nullopt;
}

std::string map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::CollapseC: return "collapse-C";
    case MapKind::PolynomialInclusion: return "polynomial-inclusion";
    case MapKind::Section: return "section";
  }
  return "?";
}

namespace {

template <class F>
void for_each_piece(const AlgebraContext& ctx, int cap, F&& f) {
  const auto states = ctx.states();
  const auto vecs = alex2_vectors(ctx.n(), cap);
  for (const auto& x : states)
    for (const auto& y : states) {
      if (ctx.flavor() != Flavor::B0 && is_far(x, y)) continue;
      for (const auto& a : vecs) {
        if (graded_piece_basis(ctx, x, y, a).empty()) continue;
        f(x, y, a);
      }
    }
}

int alex_sum(const BasisElement& b) {
  auto a = alex2_of(b);
  return std::accumulate(a.begin(), a.end(), 0);
}

}  // namespace

QuasiIsoReport verify_quasi_iso(const AlgebraContext& ctx, MapKind kind, int degree_cap) {
  QuasiIsoReport rep;
  rep.kind = kind;
  auto fail = [&](const std::string& w) {
    rep.ok = false;
    if (rep.failures.size() < 20) rep.failures.push_back(w);
  };
  const int n = ctx.n();

  if (kind == MapKind::CollapseC) {
    auto strip = [&](const Element& e) {
      std::vector<BasisElement> t;
      for (const auto& b : e.terms())
        if (!b.c) t.push_back(b);
      return Element::from_canonical(ctx, std::move(t));
    };
    for_each_piece(ctx, degree_cap, [&](const IState& x, const IState& y, const std::vector<int>& a) {
      HomologyPiece P(ctx, x, y, a);
      ++rep.pieces;
      const auto& cx = P.complex();
      for (const auto& [m, basis] : cx.strata) {
        for (const auto& b : basis) {
          Element db = strip(differential(from_basis(ctx, b)));
          if (!db.is_zero() && !P.canonical(db).is_zero()) fail("phi(d " + b.to_string() + ") is nonzero in homology");
        }
        const auto& h = P.degrees().at(m);
        std::vector<BitVec> imgs;
        for (const auto& z : h.reps) {
          ++rep.classes;
          Element zc = P.canonical(strip(z));
          if (!(zc == z)) fail("phi does not fix the class of " + z.to_string());
          imgs.push_back(cx.to_vec(m, zc));
        }
        if (EchelonBasis::span_of(cx.dim(m), imgs).rank() != h.rank) fail("phi is not injective on homology");
      }
    });
    // phi(g b) = phi(g) phi(b) on generators against a bounded basis
    const auto small = bounded_basis(ctx, 2);
    for (const auto& x : ctx.states())
      for (const auto& e : edges_from(ctx, x)) {
        Element g = normalize(ctx, Path(x, {e.label}));
        Element gs = strip(g);
        for (const auto& b : small) {
          if (!(b.left == e.target)) continue;
          ++rep.products;
          Element be = from_basis(ctx, b);
          if (!(strip(g * be) == gs * strip(be))) fail("phi is not multiplicative on " + e.label.to_string() + " * " + b.to_string());
        }
      }
    return rep;
  }

  if (kind == MapKind::PolynomialInclusion) {
    if (ctx.k() != n + 1 || ctx.flavor() != Flavor::B) {
      fail("polynomial inclusion needs B(n,n+1,S)");
      return rep;
    }
    const IState x = ctx.states().at(0);
    for_each_piece(ctx, degree_cap, [&](const IState&, const IState&, const std::vector<int>& a) {
      HomologyPiece P(ctx, x, x, a);
      ++rep.pieces;
      bool off_s = true;
      BasisElement p;
      p.left = p.right = x;
      for (int i = 1; i <= n; ++i) {
        if (a[i - 1] % 2) off_s = false;
        if (a[i - 1] && ctx.in_s(i)) off_s = false;
        p.u[i] = static_cast<std::uint16_t>(a[i - 1] / 2);
      }
      std::size_t total = 0;
      for (const auto& [m, h] : P.degrees()) total += h.rank;
      if (!off_s) {
        if (total) fail("homology outside the polynomial image at " + x.to_string());
        return;
      }
      ++rep.classes;
      Element e = from_basis(ctx, p);
      if (!P.is_cycle(e) || P.canonical(e).is_zero()) fail("U-monomial " + p.to_string() + " is not a nonzero class");
      if (total != 1 || P.rank(0) != 1) fail("homology rank differs from the polynomial ring at " + p.to_string());
      for (int i = 1; i <= n; ++i) {
        if (ctx.in_s(i)) continue;
        ++rep.products;
        BasisElement q = p;
        q.u[i] = static_cast<std::uint16_t>(q.u[i] + 1);
        if (!(gen_sum(ctx, Gen::U, i) * e == from_basis(ctx, q))) fail("inclusion is not multiplicative at " + p.to_string());
      }
    });
    return rep;
  }

  // Section: theorem-basis representatives with i_a = min(G cap S)
  std::set<BasisElement> images;
  std::map<std::uint32_t, std::vector<BasisElement>> by_left;
  for_each_piece(ctx, degree_cap, [&](const IState& x, const IState& y, const std::vector<int>& a) {
    HomologyPiece P(ctx, x, y, a);
    ++rep.pieces;
    const auto tb = theorem_basis(ctx, x, y, a);
    std::map<int, std::vector<BitVec>> per;
    for (const auto& t : tb) {
      ++rep.classes;
      Element e = from_basis(ctx, t.rep);
      if (!differential(e).is_zero()) {
        fail("section image " + t.rep.to_string() + " is not a cycle");
        continue;
      }
      per[t.maslov].push_back(P.complex().to_vec(t.maslov, P.canonical(e)));
      images.insert(t.rep);
      by_left[x.bits()].push_back(t.rep);
    }
    for (const auto& [m, h] : P.degrees()) {
      auto it = per.find(m);
      std::size_t cnt = it == per.end() ? 0 : it->second.size();
      std::size_t rk = it == per.end() ? 0 : EchelonBasis::span_of(P.complex().dim(m), it->second).rank();
      if (cnt != h.rank || rk != h.rank)
        fail("section images do not form a homology basis at " + x.to_string() + "," + y.to_string() + " maslov " + std::to_string(m));
    }
  });
  for (const auto& a : images) {
    const int da = alex_sum(a);
    auto it = by_left.find(a.right.bits());
    if (it == by_left.end()) continue;
    for (const auto& b : it->second) {
      if (da + alex_sum(b) > degree_cap) continue;
      ++rep.products;
      BasisElement p;
      if (multiply_terms(ctx, a, b, p) && !images.count(p))
        fail("product " + a.to_string() + " * " + b.to_string() + " leaves the section image");
    }
  }
  return rep;
}

ClearanceReport bounded_clearance(const AlgebraContext& ctx) {
  ClearanceReport rep;
  HomologyCache cache(ctx);
  std::vector<Element> edges;
  for (const auto& x : ctx.states())
    for (const auto& e : edges_from(ctx, x)) {
      Element g = normalize(ctx, Path(x, {e.label}));
      if (g.is_zero() || !differential(g).is_zero()) continue;
      Homogeneous h = homogeneous_info(g);
      if (cache.piece(h.left, h.right, h.alex2).canonical(g).is_zero()) continue;
      edges.push_back(g);
    }
  std::map<std::uint32_t, std::vector<const Element*>> from;
  for (const auto& g : edges) from[g.terms()[0].left.bits()].push_back(&g);
  for (const auto& g1 : edges)
    for (const Element* g2 : from[g1.terms()[0].right.bits()])
      for (const Element* g3 : from[g2->terms()[0].right.bits()]) {
        ++rep.sequences;
        MasseySequence seq{g1, *g2, *g3, std::nullopt, std::nullopt};
        if (!check_massey_admissible3(seq, cache).admissible) continue;
        ++rep.admissible;
        MasseyResult r = massey3(seq, cache, 0);
        if (r.nonzero()) {
          ++rep.nonzero;
          rep.ok = false;
          if (rep.failures.size() < 10)
            rep.failures.push_back("nonzero Massey product on (" + g1.to_string() + ", " + g2->to_string() + ", " +
                                   g3->to_string() + ") = " + r.value.to_string());
        }
      }
  return rep;
}

std::string certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::MasseyTriple: return "massey-triple";
    case CertificateKind::ZeroDifferential: return "zero-differential";
    case CertificateKind::CollapseC: return "collapse-C";
    case CertificateKind::PolynomialInclusion: return "polynomial-inclusion";
    case CertificateKind::Section: return "section";
    case CertificateKind::Clearance: return "clearance";
    case CertificateKind::Empty: return "empty";
    case CertificateKind::None: return "none";
  }
  return "?";
}

std::string table_clause(const AlgebraContext& ctx) {
  const int n = ctx.n(), k = ctx.k();
  const std::uint32_t s = ctx.s_mask();
  const std::uint32_t one = 1u << 1, last = 1u << n;
  if (ctx.states().empty()) return "no admissible I-states";
  if (!s) return "S empty";
  if (k == 0) return "k=0";
  switch (ctx.flavor()) {
    case Flavor::B0:
    case Flavor::B:
      if (k == n) return "k=n";
      if (k == n + 1) return "k=n+1";
      return "";
    case Flavor::Br:
      if (s == one) return "S={1}";
      if (k == n) return "k=n";
      if (k == n - 1 && (s & one)) return "k=n-1 and 1 in S";
      return "";
    case Flavor::Bl:
      if (s == last) return "S={n}";
      if (k == n) return "k=n";
      if (k == n - 1 && (s & last)) return "k=n-1 and n in S";
      return "";
    case Flavor::Bprime:
      if ((s & ~(one | last)) == 0) return "S within {1,n}";
      if (k == n - 1) return "k=n-1";
      if (k == n - 2 && (s & one) && (s & last)) return "k=n-2 and {1,n} in S";
      return "";
  }
  return "";
}

bool formal_by_table(const AlgebraContext& ctx) { return !table_clause(ctx).empty(); }

namespace {

CertificateKind formal_kind(const AlgebraContext& ctx) {
  const int n = ctx.n(), k = ctx.k();
  const std::uint32_t s = ctx.s_mask();
  const std::uint32_t one = 1u << 1, last = 1u << n;
  if (ctx.states().empty()) return CertificateKind::Empty;
  if (!s || k == 0) return CertificateKind::ZeroDifferential;
  if (k == n && ctx.flavor() != Flavor::Bprime) return CertificateKind::CollapseC;
  if (k == n + 1) return CertificateKind::PolynomialInclusion;
  switch (ctx.flavor()) {
    case Flavor::Br:
      if (s == one) return CertificateKind::Section;
      break;
    case Flavor::Bl:
      if (s == last) return CertificateKind::Section;
      break;
    case Flavor::Bprime:
      if ((s & ~(one | last)) == 0 || k == n - 1) return CertificateKind::Section;
      break;
    default: break;
  }
  return CertificateKind::Clearance;
}

}  // namespace

FormalityVerdict formality_verdict(const AlgebraContext& ctx, const VerdictOptions& opt) {
  FormalityVerdict v;
  v.ctx = ctx;
  v.clause = table_clause(ctx);
  v.formal = !v.clause.empty();
  if (!v.formal) {
    v.clause = "non-formal";
    v.kind = CertificateKind::MasseyTriple;
    if (opt.certify && ctx.n() <= opt.n_bound) {
      v.massey = nonformal_certificate(ctx);
      v.verified = v.massey && v.massey->verified && v.massey->witness_stable;
    }
    return v;
  }
  v.kind = formal_kind(ctx);
  if (!opt.certify || ctx.n() > opt.n_bound) return v;
  switch (v.kind) {
    case CertificateKind::Empty: v.verified = true; break;
    case CertificateKind::ZeroDifferential: {
      v.verified = true;
      for (const auto& x : ctx.states())
        for (const auto& e : edges_from(ctx, x))
          if (!differential(normalize(ctx, Path(x, {e.label}))).is_zero()) v.verified = false;
      break;
    }
    case CertificateKind::CollapseC:
      v.quasi_iso = verify_quasi_iso(ctx, MapKind::CollapseC, opt.degree_cap);
      v.verified = v.quasi_iso->ok;
      break;
    case CertificateKind::PolynomialInclusion:
      v.quasi_iso = verify_quasi_iso(ctx, MapKind::PolynomialInclusion, opt.degree_cap);
      v.verified = v.quasi_iso->ok;
      break;
    case CertificateKind::Section:
      v.quasi_iso = verify_quasi_iso(ctx, MapKind::Section, opt.degree_cap);
      v.verified = v.quasi_iso->ok;
      break;
    case CertificateKind::Clearance:
      v.clearance = bounded_clearance(ctx);
      v.verified = v.clearance->ok;
      break;
    default: break;
  }
  return v;
}

}  // namespace ksalg
