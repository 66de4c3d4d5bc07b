#include "doctest.h"
#include "ksalg/formality.hpp"

using namespace ksalg;

static IState S(int n, std::vector<int> m) { return IState::from_members(n, m); }
static AlgebraContext B(int n, int k, std::vector<int> s, Flavor f = Flavor::B) { return AlgebraContext::make(n, k, s, f); }

TEST_CASE("admissible families") {
  auto ctx = B(2, 1, {1});
  auto t = family_triple(ctx, 1, 1, S(2, {1}));
  REQUIRE(t);
  auto seq = sequence_of(ctx, *t);
  CHECK(is_massey_admissible3(seq));
  // [a1 a2] != 0 -> not admissible: ([R1],[L1],[R1]) with S empty, a1 a2 = U1 survives
  auto c0 = B(2, 1, {});
  MasseySequence bad{normalize(c0, Path::parse("{0}:R1", 2)), normalize(c0, Path::parse("{1}:L1", 2)),
                     normalize(c0, Path::parse("{0}:R1", 2)), std::nullopt, std::nullopt};
  HomologyCache cache(c0);
  auto adm = check_massey_admissible3(bad, cache);
  CHECK_FALSE(adm.admissible);
  CHECK(adm.reason == "[a1 a2] is nonzero");
  // not composable
  MasseySequence nc{normalize(c0, Path::parse("{0}:R1", 2)), normalize(c0, Path::parse("{0}:R1", 2)),
                    normalize(c0, Path::parse("{0}:R1", 2)), std::nullopt, std::nullopt};
  CHECK_THROWS_AS(is_massey_admissible3(nc), InvalidArgument);
}

TEST_CASE("massey examples") {
  {
    auto ctx = B(2, 1, {1});
    HomologyCache cache(ctx);
    auto c = check_triple(ctx, *family_triple(ctx, 1, 1, S(2, {1})), cache);
    CHECK(c.verified);
    CHECK(c.result.nonzero());
    CHECK(c.result.value == normalize(ctx, Path::parse("{1}:C1,R2", 2)));
    CHECK(c.result.value.to_string() == "C1*f[{1},{2}]");
  }
  {
    auto ctx = B(3, 2, {1, 2});
    HomologyCache cache(ctx);
    bool any = false;
    for (const auto& x : ctx.states())
      if (auto t = family_triple(ctx, 2, 1, x)) {
        auto c = check_triple(ctx, *t, cache);
        CHECK(c.verified);
        any = true;
      }
    CHECK(any);
  }
  {
    auto ctx = B(3, 1, {1});
    HomologyCache cache(ctx);
    auto c = check_triple(ctx, *family_triple(ctx, 3, 1, S(3, {1})), cache);
    CHECK(c.verified);
    CHECK(c.result.value.to_string() == "C1*U2^1*f[{1},{1}]");
  }
}

TEST_CASE("Br extra sequence") {
  for (int n = 2; n <= 4; ++n)
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      if (s & 1u) continue;  // 1 in S
      auto ctx = AlgebraContext::make(n, n - 1, s << 1, Flavor::Br);
      auto cert = nonformal_certificate(ctx);
      REQUIRE(cert);
      CHECK(cert->verified);
      CHECK(cert->witness_stable);
      CHECK(is_massey_admissible3(cert->seq));
    }
}

TEST_CASE("massey gradings and witness independence, n <= 3") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for (std::uint32_t s = 1; s < (1u << n); ++s) {
        auto ctx = AlgebraContext::make(n, k, s << 1);
        HomologyCache cache(ctx);
        for (int f = 1; f <= 4; ++f)
          for (int i = 1; i < n; ++i)
            for (const auto& x : ctx.states()) {
              auto t = family_triple(ctx, f, i, x);
              if (!t) continue;
              auto seq = sequence_of(ctx, *t);
              if (!check_massey_admissible3(seq, cache).admissible) continue;
              auto r0 = massey3(seq, cache, 0);
              auto h1 = homogeneous_info(seq.a1), h2 = homogeneous_info(seq.a2), h3 = homogeneous_info(seq.a3);
              REQUIRE(r0.maslov == h1.maslov + h2.maslov + h3.maslov + 1);
              for (int l = 0; l < n; ++l) REQUIRE(r0.alex2[l] == h1.alex2[l] + h2.alex2[l] + h3.alex2[l]);
              for (std::uint64_t seed = 1; seed <= 8; ++seed) REQUIRE(massey3(seq, cache, seed * 7919).value == r0.value);
              // supplied witnesses are honoured
              MasseySequence w = seq;
              w.xi02 = r0.xi02;
              w.xi13 = r0.xi13;
              REQUIRE(massey3(w, cache, 0).value == r0.value);
            }
      }
}

TEST_CASE("bad witness rejected") {
  auto ctx = B(2, 1, {1});
  auto seq = sequence_of(ctx, *family_triple(ctx, 1, 1, S(2, {1})));
  seq.xi02 = Element(ctx);
  HomologyCache cache(ctx);
  CHECK_THROWS_AS(massey3(seq, cache, 0), InvalidArgument);
}

TEST_CASE("verdict examples") {
  auto v = formality_verdict(B(2, 1, {1}));
  CHECK_FALSE(v.formal);
  REQUIRE(v.massey);
  CHECK(v.verified);
  CHECK(v.massey->result.value.to_string() == "C1*f[{1},{2}]");

  auto w = formality_verdict(B(3, 3, {2}));
  CHECK(w.formal);
  CHECK(w.clause == "k=n");
  CHECK(w.kind == CertificateKind::CollapseC);
  CHECK(w.verified);

  auto p = formality_verdict(B(4, 2, {1, 4}, Flavor::Bprime));
  CHECK(p.formal);
  CHECK(p.kind == CertificateKind::Section);
  CHECK(p.verified);
  REQUIRE(p.quasi_iso);
  CHECK(p.quasi_iso->ok);

  // formal by the k=n-1, 1 in S clause but with no explicit map: bounded clearance
  auto r = formality_verdict(B(3, 2, {1, 2}, Flavor::Br));
  CHECK(r.formal);
  CHECK(r.kind == CertificateKind::Clearance);
  CHECK(r.verified);
  REQUIRE(r.clearance);
  CHECK(r.clearance->admissible > 0);
}

TEST_CASE("quasi-isomorphisms") {
  auto a = verify_quasi_iso(B(3, 3, {1, 3}), MapKind::CollapseC, 8);
  CHECK(a.ok);
  CHECK(a.classes > 0);
  auto b = verify_quasi_iso(B(2, 3, {1}), MapKind::PolynomialInclusion, 12);
  CHECK(b.ok);
  CHECK(b.classes == 7);  // U2^0..U2^6
  auto c = verify_quasi_iso(B(3, 1, {1}, Flavor::Br), MapKind::Section, 8);
  CHECK(c.ok);
  auto d = verify_quasi_iso(B(4, 3, {2, 3}, Flavor::Bprime), MapKind::Section, 8);
  CHECK(d.ok);
  // negative controls
  CHECK_FALSE(verify_quasi_iso(B(2, 1, {1}), MapKind::Section, 6).ok);
  CHECK_FALSE(verify_quasi_iso(B(2, 1, {1}), MapKind::CollapseC, 6).ok);
}

TEST_CASE("truth tables") {
  CHECK(formal_by_table(B(3, 0, {1})));
  CHECK(formal_by_table(B(3, 4, {1, 2})));
  CHECK_FALSE(formal_by_table(B(3, 2, {3})));
  CHECK(formal_by_table(B(3, 2, {1, 2}, Flavor::Br)));
  CHECK_FALSE(formal_by_table(B(3, 2, {2, 3}, Flavor::Br)));
  CHECK(formal_by_table(B(3, 2, {2, 3}, Flavor::Bl)));
  CHECK(formal_by_table(B(4, 2, {1, 4}, Flavor::Bprime)));
  CHECK_FALSE(formal_by_table(B(4, 2, {1, 3}, Flavor::Bprime)));
  CHECK(formal_by_table(B(4, 1, {1, 4}, Flavor::Bprime)));
  CHECK_FALSE(formal_by_table(B(4, 1, {2}, Flavor::Bprime)));
}

TEST_CASE("single-graded admissibility is reported") {
  auto ctx = B(2, 1, {1});
  HomologyCache cache(ctx);
  auto seq = sequence_of(ctx, *family_triple(ctx, 1, 1, S(2, {1})));
  bool single = single_graded_admissible3(seq, cache);
  MESSAGE("single-graded admissible for ([L1],[R1],[R2]) in B(2,1,{1}): " << single);
  CHECK(check_massey_admissible3(seq, cache).admissible);
}
