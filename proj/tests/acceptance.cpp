// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ksalg/algebra.hpp"
#include "ksalg/formality.hpp"
#include "ksalg/homology.hpp"
#include "ksalg/quiver.hpp"
#include "ksalg/symmetry.hpp"
#include "oracle.hpp"

using namespace ksalg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;
  void fail(const std::string& s) {
    ok = false;
    if (notes.size() < 10) notes.push_back(s);
  }
};

const Flavor kFlavors[] = {Flavor::B, Flavor::Br, Flavor::Bl, Flavor::Bprime};

void each_context(int n_max, const std::vector<Flavor>& flavors, const std::function<void(const AlgebraContext&)>& f) {
  for (int n = 1; n <= n_max; ++n)
    for (Flavor fl : flavors)
      for (int k = 0; k <= n + 1; ++k)
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
          if (fl == Flavor::B0 && s) continue;  // B0 has no C variables
          f(AlgebraContext::make(n, k, s << 1, fl));
        }
}

// oracle counts for every alex2 with sum <= cap, bucketed
std::map<std::vector<int>, std::size_t> oracle_buckets(const AlgebraContext& ctx, const IState& x, const IState& y,
                                                        int cap) {
  std::map<std::vector<int>, std::size_t> out;
  const int n = ctx.n();
  if (oracle::far(x, y)) return out;
  auto gens = oracle::generating(x, y);
  std::vector<int> base(n + 1), u(n + 1, 0);
  int sum0 = 0;
  for (int l = 1; l <= n; ++l) sum0 += base[l] = std::abs(oracle::v(x, y, l));
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i > n) {
      for (auto [a, b] : gens) {
        bool div = true;
        for (int l = a; l <= b; ++l) div = div && u[l] > 0;
        if (div) return;
      }
      for (std::uint32_t c = 0; c < (1u << (n + 1)); c += 2) {
        if (c & ~ctx.s_mask()) continue;
        std::vector<int> a(n);
        int tot = 0;
        for (int l = 1; l <= n; ++l) tot += a[l - 1] = 2 * u[l] + base[l] + 2 * ((c >> l) & 1);
        if (tot <= cap) ++out[a];
      }
      return;
    }
    for (int e = 0; used + 2 * e <= cap; ++e) {
      u[i] = e;
      rec(i + 1, used + 2 * e);
    }
    u[i] = 0;
  };
  if (sum0 <= cap) rec(1, sum0);
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::size_t pieces = 0, elements = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto vecs = alex2_vectors(n, 12);
    for (int k = 0; k <= n + 1; ++k)
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        auto ctx = AlgebraContext::make(n, k, s << 1);
        for (const auto& x : ctx.states())
          for (const auto& y : ctx.states()) {
            auto want = oracle_buckets(ctx, x, y, 12);
            for (const auto& a : vecs) {
              ++pieces;
              std::size_t got = graded_piece_basis(ctx, x, y, a).size();
              auto it = want.find(a);
              std::size_t w = it == want.end() ? 0 : it->second;
              elements += got;
              if (got != w)
                o.fail(ctx.to_string() + " " + x.to_string() + "->" + y.to_string() + ": " + std::to_string(got) +
                       " vs " + std::to_string(w));
            }
          }
      }
  }
  o.detail = std::to_string(pieces) + " pieces, " + std::to_string(elements) + " basis elements";
  return o;
}

Path random_path(const AlgebraContext& ctx, std::mt19937_64& rng, int max_len) {
  auto states = ctx.states();
  IState x = states[rng() % states.size()];
  Path p(x);
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) {
    auto es = edges_from(ctx, p.end());
    if (es.empty()) break;
    p = p.then(Path(p.end(), {es[rng() % es.size()].label}));
  }
  return p;
}

Outcome criterion2() {
  Outcome o;
  std::size_t relations = 0, pairs = 0;
  std::vector<AlgebraContext> ctxs;
  each_context(4, {Flavor::B, Flavor::Br, Flavor::Bl, Flavor::Bprime}, [&](const AlgebraContext& ctx) {
    if (ctx.states().empty()) return;
    ctxs.push_back(ctx);
    auto r = verify_presentation(ctx);
    relations += r.relations;
    pairs += r.pairs;
    for (auto& f : r.failures) o.fail(ctx.to_string() + ": " + f);
  });
  std::mt19937_64 rng(20240601);
  const int splits = 10000;
  for (int t = 0; t < splits; ++t) {
    const auto& ctx = ctxs[rng() % ctxs.size()];
    Path p = random_path(ctx, rng, 8);
    std::size_t cut = p.length() ? rng() % (p.length() + 1) : 0;
    Element whole = normalize(ctx, p);
    Element parts = normalize(ctx, p.prefix(cut)) * normalize(ctx, p.suffix(cut));
    if (!(whole == parts)) o.fail(ctx.to_string() + " split of " + p.to_string() + " at " + std::to_string(cut));
  }
  o.detail = std::to_string(relations) + " relations, " + std::to_string(pairs) + " canonical paths, " +
             std::to_string(splits) + " random splits";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t pieces = 0, classes = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto vecs = alex2_vectors(n, 12);
    for (int k = 0; k <= n + 1; ++k)
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        auto ctx = AlgebraContext::make(n, k, s << 1);
        for (const auto& x : ctx.states())
          for (const auto& y : ctx.states()) {
            if (is_far(x, y)) continue;
            for (const auto& a : vecs) {
              auto c = build_graded_complex(ctx, x, y, a);
              if (c.strata.empty()) continue;
              ++pieces;
              auto ranks = homology_ranks(c);
              std::map<int, std::size_t> th;
              for (const auto& t : theorem_basis(ctx, x, y, a)) ++th[t.maslov];
              for (auto it = ranks.begin(); it != ranks.end();) it = it->second ? std::next(it) : ranks.erase(it);
              for (auto [m, r] : th) classes += r;
              if (ranks != th) o.fail(ctx.to_string() + " " + x.to_string() + "->" + y.to_string());
            }
          }
      }
  }
  o.detail = std::to_string(pieces) + " nonzero pieces, " + std::to_string(classes) + " classes";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t pieces = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n + 1; ++k)
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        auto ctx = AlgebraContext::make(n, k, s << 1);
        for (const auto& x : ctx.states())
          for (const auto& y : ctx.states()) {
            if (is_far(x, y)) continue;
            auto r = verify_splitting(ctx, x, y, 12);
            pieces += r.pieces;
            for (auto& f : r.failures) o.fail(ctx.to_string() + ": " + f);
          }
      }
  o.detail = std::to_string(pieces) + " pieces, alex2 sum <= 12";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 2; n <= 4; ++n) {
    auto ctx = AlgebraContext::make(n, n - 1, 0u, Flavor::Bprime);
    std::vector<int> mem;
    for (int i = 1; i <= n - 1; ++i) mem.push_back(i);
    IState x = IState::from_members(n, mem);
    // every monomial with exponents <= 2
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      BasisElement b;
      b.left = b.right = x;
      int c = code;
      bool all = true;
      for (int l = 1; l <= n; ++l) {
        b.u[l] = static_cast<std::uint16_t>(c % 3);
        c /= 3;
        all = all && b.u[l] > 0;
      }
      ++checked;
      bool zero = from_basis(ctx, b).is_zero();
      if (zero != all) o.fail(ctx.to_string() + " monomial " + b.to_string() + (zero ? " vanishes" : " survives"));
    }
    // and through the quiver: the U-loop path U1...Un at x
    std::vector<EdgeLabel> es;
    for (int l = 1; l <= n; ++l) es.push_back(EdgeLabel{Gen::U, l});
    if (!normalize(ctx, Path(x, es)).is_zero()) o.fail(ctx.to_string() + " U1...Un I_x nonzero");
  }
  o.detail = std::to_string(checked) + " monomials at [1,n-1]";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t elements = 0, products = 0, contexts = 0;
  each_context(4, {Flavor::B0, Flavor::B, Flavor::Br, Flavor::Bl, Flavor::Bprime}, [&](const AlgebraContext& ctx) {
    if (ctx.states().empty()) return;
    ++contexts;
    auto r = symmetry_report(ctx, 2);
    elements += r.elements;
    products += r.products;
    for (auto& f : r.failures) o.fail(ctx.to_string() + ": " + f);
  });
  o.detail = std::to_string(contexts) + " contexts, " + std::to_string(elements) + " elements, " +
             std::to_string(products) + " products, U-degree <= 2";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t certs = 0;
  const std::pair<int, int> nk[] = {{2, 1}, {3, 1}, {3, 2}};
  const char* want_names[] = {"", "C_i R_{i+1}", "C_{i+1} L_i", "C_i U_{i+1}", "C_{i+1} U_i"};
  for (auto [n, k] : nk)
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      auto ctx = AlgebraContext::make(n, k, s << 1);
      HomologyCache cache(ctx);
      for (int f = 1; f <= 4; ++f)
        for (int i = 1; i <= n - 1; ++i) {
          if (!family_applies(ctx, f, i)) continue;
          bool found = false;
          for (const auto& x : ctx.states()) {
            auto t = family_triple(ctx, f, i, x);
            if (!t) continue;
            found = true;
            ++certs;
            auto c = check_triple(ctx, *t, cache, 3);
            if (!c.verified || !c.result.nonzero() || !c.witness_stable)
              o.fail(ctx.to_string() + " family " + std::to_string(f) + " (" + want_names[f] + ") i=" +
                     std::to_string(i) + " x=" + x.to_string() + ": got " + c.result.value.to_string());
          }
          if (!found) o.fail(ctx.to_string() + " family " + std::to_string(f) + " i=" + std::to_string(i) + " has no x");
        }
    }
  o.detail = std::to_string(certs) + " certificates";
  return o;
}

// truth tables written out independently of the library's verdict code
bool table(int n, int k, std::uint32_t s, Flavor f) {
  const std::uint32_t one = 1u << 1, last = 1u << n;
  switch (f) {
    case Flavor::B: return s == 0 || k == 0 || k == n || k == n + 1;
    case Flavor::Br: return s == 0 || s == one || k == 0 || k == n || (k == n - 1 && (s & one));
    case Flavor::Bl: return s == 0 || s == last || k == 0 || k == n || (k == n - 1 && (s & last));
    case Flavor::Bprime:
      return (s & ~(one | last)) == 0 || k == 0 || k == n - 1 || (k == n - 2 && (s & one) && (s & last));
    default: return true;
  }
}

Outcome criterion8() {
  Outcome o;
  std::size_t cells = 0, nonformal = 0, certified = 0, maps = 0;
  VerdictOptions opt;
  opt.n_bound = 4;
  opt.degree_cap = 12;
  for (int n = 1; n <= 5; ++n)
    for (Flavor f : kFlavors)
      for (int k = 0; k <= n + 1; ++k)
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
          auto ctx = AlgebraContext::make(n, k, s << 1, f);
          ++cells;
          bool want = table(n, k, s << 1, f);
          // truncations with no admissible idempotent are the zero algebra
          if (ctx.states().empty()) want = true;
          opt.certify = n <= 4;
          auto v = formality_verdict(ctx, opt);
          if (v.formal != want) {
            o.fail(ctx.to_string() + " verdict " + (v.formal ? "formal" : "non-formal"));
            continue;
          }
          if (n > 4) continue;
          if (!v.formal) {
            ++nonformal;
            if (v.verified && v.massey && v.massey->result.nonzero())
              ++certified;
            else
              o.fail(ctx.to_string() + " has no verified Massey certificate");
          } else {
            if (v.quasi_iso) ++maps;
            if (!v.verified) o.fail(ctx.to_string() + " formal certificate (" + certificate_kind_name(v.kind) + ") failed");
          }
        }
  o.detail = std::to_string(cells) + " cells, " + std::to_string(certified) + "/" + std::to_string(nonformal) +
             " non-formal cells certified, " + std::to_string(maps) + " quasi-isomorphisms checked";
  return o;
}

std::vector<Element> generators(const AlgebraContext& ctx) {
  std::vector<Element> g;
  for (int i = 1; i <= ctx.n(); ++i) {
    g.push_back(gen_sum(ctx, Gen::R, i));
    g.push_back(gen_sum(ctx, Gen::L, i));
    g.push_back(gen_sum(ctx, Gen::U, i));
    if (ctx.in_s(i)) g.push_back(gen_sum(ctx, Gen::C, i));
  }
  for (const auto& x : ctx.states()) {
    g.push_back(gen_idempotent(ctx, x));
    for (const auto& e : edges_from(ctx, x)) g.push_back(normalize(ctx, Path(x, {e.label})));
  }
  return g;
}

Outcome criterion9() {
  Outcome o;
  std::size_t gens = 0, gen_pairs = 0;
  std::vector<AlgebraContext> ctxs;
  each_context(5, {Flavor::B0, Flavor::B, Flavor::Br, Flavor::Bl, Flavor::Bprime}, [&](const AlgebraContext& ctx) {
    if (ctx.states().empty()) return;
    ctxs.push_back(ctx);
    auto g = generators(ctx);
    gens += g.size();
    for (const auto& a : g) {
      if (!differential(differential(a)).is_zero()) o.fail(ctx.to_string() + " d^2 " + a.to_string());
    }
    for (const auto& a : g)
      for (const auto& b : g) {
        ++gen_pairs;
        if (!(differential(a * b) == differential(a) * b + a * differential(b)))
          o.fail(ctx.to_string() + " Leibniz " + a.to_string() + " , " + b.to_string());
      }
  });
  std::mt19937_64 rng(777);
  const int pairs = 10000;
  std::map<std::size_t, std::vector<BasisElement>> pool;
  for (int t = 0; t < pairs; ++t) {
    std::size_t ci = rng() % ctxs.size();
    const auto& ctx = ctxs[ci];
    auto it = pool.find(ci);
    if (it == pool.end()) it = pool.emplace(ci, bounded_basis(ctx, 2)).first;
    const auto& basis = it->second;
    auto rand_elem = [&]() {
      std::vector<BasisElement> ts;
      int m = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < m; ++j) ts.push_back(basis[rng() % basis.size()]);
      return Element::from_canonical(ctx, ts);
    };
    Element a = rand_elem(), b = rand_elem();
    if (!differential(differential(a)).is_zero()) o.fail(ctx.to_string() + " d^2 " + a.to_string());
    if (!(differential(a * b) == differential(a) * b + a * differential(b)))
      o.fail(ctx.to_string() + " Leibniz " + a.to_string() + " , " + b.to_string());
  }
  o.detail = std::to_string(ctxs.size()) + " contexts, " + std::to_string(gens) + " generators, " +
             std::to_string(gen_pairs) + " generator pairs, " + std::to_string(pairs) + " random pairs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  struct Item {
    int id;
    const char* name;
    Outcome (*run)();
    double budget;  // seconds, 0 for none
  };
  const Item items[] = {
      {1, "basis counts vs brute force", criterion1, 120},
      {2, "presentation isomorphism", criterion2, 120},
      {3, "homology ranks vs theorem basis", criterion3, 300},
      {4, "splitting into factors", criterion4, 0},
      {5, "truncated quiver relation", criterion5, 0},
      {6, "symmetries rho and o", criterion6, 0},
      {7, "Massey certificates", criterion7, 0},
      {8, "formality truth tables", criterion8, 600},
      {9, "differential soundness", criterion9, 0},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  for (const auto& it : items) {
    if (only && it.id != only) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (it.budget > 0 && secs > it.budget) o.fail("over time budget of " + std::to_string(int(it.budget)) + " s");
    std::printf("criterion %d: %s  %s [%s] (%.1f s)\n", it.id, o.ok ? "PASS" : "FAIL", it.name, o.detail.c_str(), secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
