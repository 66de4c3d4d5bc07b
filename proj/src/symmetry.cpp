#include "ksalg/symmetry.hpp"

#include <functional>

namespace ksalg {

namespace {

std::uint32_t rho_s(std::uint32_t s, int n) {
  std::uint32_t r = 0;
  for (int i = 1; i <= n; ++i)
    if ((s >> i) & 1u) r |= 1u << (n + 1 - i);
  return r;
}

}  // namespace

AlgebraContext rho_context(const AlgebraContext& ctx) {
  Flavor f = ctx.flavor();
  if (f == Flavor::Br) f = Flavor::Bl;
  else if (f == Flavor::Bl) f = Flavor::Br;
  return AlgebraContext::make(ctx.n(), ctx.k(), rho_s(ctx.s_mask(), ctx.n()), f);
}

IState rho_state(const IState& x) {
  const int n = x.width();
  std::uint32_t b = 0;
  for (int a = 0; a <= n; ++a)
    if (x.contains(a)) b |= 1u << (n - a);
  return IState(n, b);
}

BasisElement rho_basis(const BasisElement& b, int n) {
  BasisElement r;
  r.left = rho_state(b.left);
  r.right = rho_state(b.right);
  for (int i = 1; i <= n; ++i) r.u[n + 1 - i] = b.u[i];
  r.c = rho_s(b.c, n);
  return r;
}

BasisElement o_basis(const BasisElement& b) {
  BasisElement r = b;
  r.left = b.right;
  r.right = b.left;
  return r;
}

Element rho(const Element& a) {
  const AlgebraContext& ctx = a.context();
  std::vector<BasisElement> t;
  t.reserve(a.terms().size());
  for (const auto& b : a.terms()) t.push_back(rho_basis(b, ctx.n()));
  return Element::from_terms(rho_context(ctx), std::move(t));
}

Element o(const Element& a) {
  std::vector<BasisElement> t;
  t.reserve(a.terms().size());
  for (const auto& b : a.terms()) t.push_back(o_basis(b));
  return Element::from_terms(a.context(), std::move(t));
}

EdgeLabel rho_label(const EdgeLabel& e, int n) {
  EdgeLabel r{e.kind, n + 1 - e.line};
  if (e.kind == Gen::R) r.kind = Gen::L;
  if (e.kind == Gen::L) r.kind = Gen::R;
  return r;
}

Path rho(const Path& p) {
  const int n = p.start().width();
  std::vector<EdgeLabel> e;
  for (const auto& l : p.edges()) e.push_back(rho_label(l, n));
  return Path(rho_state(p.start()), std::move(e));
}

Path o(const Path& p) {
  std::vector<EdgeLabel> e;
  for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) {
    EdgeLabel l = *it;
    if (l.kind == Gen::R) l.kind = Gen::L;
    else if (l.kind == Gen::L) l.kind = Gen::R;
    e.push_back(l);
  }
  return Path(p.end(), std::move(e));
}

std::vector<BasisElement> bounded_basis(const AlgebraContext& ctx, int degree_cap) {
  const int n = ctx.n();
  std::vector<BasisElement> out;
  const auto states = ctx.states();
  const std::uint32_t s = ctx.s_mask();
  for (const auto& x : states)
    for (const auto& y : states) {
      if (ctx.flavor() != Flavor::B0 && is_far(x, y)) continue;
      BasisElement b;
      b.left = x;
      b.right = y;
      std::function<void(int, int)> rec = [&](int line, int left) {
        if (line > n) {
          std::uint32_t c = 0;
          while (true) {
            b.c = c;
            if (reduce_term(ctx, b)) out.push_back(b);
            if (c == s) break;
            c = (c - s) & s;
          }
          return;
        }
        for (int e = 0; e <= left; ++e) {
          b.u[line] = static_cast<std::uint16_t>(e);
          rec(line + 1, left - e);
        }
        b.u[line] = 0;
      };
      rec(1, degree_cap);
    }
  std::sort(out.begin(), out.end());
  return out;
}

SymmetryReport symmetry_report(const AlgebraContext& ctx, int degree_cap) {
  SymmetryReport rep;
  const int n = ctx.n();
  const AlgebraContext rctx = rho_context(ctx);
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    if (rep.failures.size() < 20) rep.failures.push_back(what);
  };

  if (!(rho_context(rctx) == ctx)) fail("rho on contexts is not an involution");
  for (const auto& x : enumerate_istates(n, ctx.k()))
    if (ctx.admissible(x) != rctx.admissible(rho_state(x))) fail("rho does not respect admissibility at " + x.to_string());

  const auto basis = bounded_basis(ctx, degree_cap);
  rep.elements = basis.size();
  for (const auto& b : basis) {
    Element e = from_basis(ctx, b);
    const std::string name = b.to_string();
    Element re = rho(e);
    Element oe = o(e);
    if (re.terms().size() != 1) {
      fail("rho of " + name + " is not a basis element");
      continue;
    }
    if (!(rho(re) == e)) fail("rho is not an involution on " + name);
    if (!(o(oe) == e)) fail("o is not an involution on " + name);
    if (!(rho(oe) == o(re))) fail("rho and o do not commute on " + name);
    if (!(rho(differential(e)) == differential(re))) fail("rho does not commute with d on " + name);
    if (!(o(differential(e)) == differential(oe))) fail("o does not commute with d on " + name);

    GradingVector g = grading(ctx, b);
    GradingVector gr = grading(rctx, re.terms()[0]);
    GradingVector go = grading(ctx, oe.terms()[0]);
    if (g.maslov != gr.maslov) fail("rho changes maslov on " + name);
    if (g.maslov != go.maslov) fail("o changes maslov on " + name);
    for (int i = 1; i <= n; ++i) {
      if (gr.alex2[i - 1] != g.alex2[n - i]) fail("rho does not reverse alex2 on " + name);
      if (go.alex2[i - 1] != g.alex2[i - 1]) fail("o changes alex2 on " + name);
      const int j = n + 1 - i;
      if (gr.unrefined[2 * (i - 1)] != g.unrefined[2 * (j - 1) + 1] || gr.unrefined[2 * (i - 1) + 1] != g.unrefined[2 * (j - 1)])
        fail("rho does not exchange tau and beta on " + name);
      if (go.unrefined[2 * (i - 1)] != g.unrefined[2 * (i - 1) + 1] || go.unrefined[2 * (i - 1) + 1] != g.unrefined[2 * (i - 1)])
        fail("o does not exchange tau and beta on " + name);
    }
  }

  // multiplicativity against single edges
  for (const auto& x : ctx.states())
    for (const auto& edge : edges_from(ctx, x)) {
      Path p(x, {edge.label});
      Element g = normalize(ctx, p);
      Element rg = rho(g);
      Element og = o(g);
      if (!(normalize(rctx, rho(p)) == rg)) fail("rho does not commute with normalize on " + p.to_string());
      if (!(normalize(ctx, o(p)) == og)) fail("o does not commute with normalize on " + p.to_string());
      for (const auto& b : basis) {
        if (!(b.left == p.end()) && !(b.right == x)) continue;
        Element e = from_basis(ctx, b);
        ++rep.products;
        if (b.left == p.end()) {
          Element ge = g * e;
          if (!(rho(ge) == rg * rho(e))) fail("rho(g e) != rho(g) rho(e) for g=" + p.to_string() + ", e=" + b.to_string());
          if (!(o(ge) == o(e) * og)) fail("o(g e) != o(e) o(g) for g=" + p.to_string() + ", e=" + b.to_string());
        }
        if (b.right == x) {
          Element eg = e * g;
          if (!(rho(eg) == rho(e) * rg)) fail("rho(e g) != rho(e) rho(g) for g=" + p.to_string() + ", e=" + b.to_string());
          if (!(o(eg) == og * o(e))) fail("o(e g) != o(g) o(e) for g=" + p.to_string() + ", e=" + b.to_string());
        }
      }
    }

  // o on canonical paths between every pair
  for (const auto& x : ctx.states())
    for (const auto& y : ctx.states()) {
      if (ctx.flavor() != Flavor::B0 && is_far(x, y)) continue;
      Path p = canonical_path(ctx, x, y);
      if (!path_in_context(ctx, p)) continue;
      if (!(normalize(ctx, o(p)) == o(normalize(ctx, p)))) fail("o does not intertwine on " + p.to_string());
      Path rp = rho(p);
      if (!(normalize(rctx, rp) == rho(normalize(ctx, p)))) fail("rho does not intertwine on " + p.to_string());
    }
  return rep;
}

}  // namespace ksalg
