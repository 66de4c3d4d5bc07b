#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ksalg/algebra.hpp"
#include "ksalg/homology.hpp"
#include "ksalg/quiver.hpp"

namespace ksalg {

struct NoWitness : Error {
  using Error::Error;
};

// Memoized graded pieces of one context.
class HomologyCache {
 public:
  explicit HomologyCache(const AlgebraContext& ctx) : ctx_(ctx) {}
  const AlgebraContext& context() const { return ctx_; }
  const HomologyPiece& piece(const IState& x, const IState& y, const std::vector<int>& alex2);
  std::size_t size() const { return pieces_.size(); }

 private:
  AlgebraContext ctx_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<int>>, std::unique_ptr<HomologyPiece>> pieces_;
};

// left/right idempotent and bigrading of a nonzero homogeneous element
struct Homogeneous {
  IState left, right;
  std::vector<int> alex2;
  int maslov = 0;
};
Homogeneous homogeneous_info(const Element& e);  // throws InvalidArgument otherwise

struct MasseySequence {
  Element a1, a2, a3;  // cycle representatives
  std::optional<Element> xi02, xi13;
};

struct Admissibility {
  bool admissible = false;
  std::string reason;  // first failed condition
};

Admissibility check_massey_admissible3(const MasseySequence& seq, HomologyCache& cache);
bool is_massey_admissible3(const MasseySequence& seq);

struct MasseyResult {
  Element value;  // canonical representative of the class
  Element xi02, xi13;
  int maslov = 0;
  std::vector<int> alex2;
  IState left, right;
  bool nonzero() const { return !value.is_zero(); }
};

// seed 0 uses the default elimination order and no cycle shifts; other seeds shuffle the
// elimination order and add random cycles to the witnesses
MasseyResult massey3(MasseySequence seq, HomologyCache& cache, std::uint64_t seed = 0);
MasseyResult massey3(const MasseySequence& seq);

// Same admissibility question with the Alexander multi-grading collapsed to the single grading.
bool single_graded_admissible3(const MasseySequence& seq, HomologyCache& cache);

// A Massey triple given by quiver paths, with the class predicted for it.
struct PathTriple {
  std::string family;
  Path p1, p2, p3;
  Path expected;
};

// family 1..4 as in the families (L_i,R_i,R_{i+1}), (R_{i+1},L_{i+1},L_i), (L_i,R_i,U_{i+1}),
// (R_{i+1},L_{i+1},U_i); x must meet [i-1,i+1] in {i}
std::optional<PathTriple> family_triple(const AlgebraContext& ctx, int family, int i, const IState& x);
// conditions on S under which the family gives an admissible sequence in B
bool family_applies(const AlgebraContext& ctx, int family, int i);
MasseySequence sequence_of(const AlgebraContext& ctx, const PathTriple& t);

struct MasseyCertificate {
  PathTriple triple;
  MasseySequence seq;
  MasseyResult result;
  Element expected;
  bool verified = false;  // admissible, nonzero, equal to the expected class
  bool witness_stable = false;
};

// candidates from the constructive proofs, first verified one wins
std::optional<MasseyCertificate> nonformal_certificate(const AlgebraContext& ctx);
MasseyCertificate check_triple(const AlgebraContext& ctx, const PathTriple& t, HomologyCache& cache, int reseeds = 3);

enum class MapKind { CollapseC, PolynomialInclusion, Section };
std::string map_kind_name(MapKind k);

struct QuasiIsoReport {
  bool ok = true;
  MapKind kind = MapKind::CollapseC;
  std::size_t pieces = 0;
  std::size_t classes = 0;
  std::size_t products = 0;
  std::vector<std::string> failures;
};

QuasiIsoReport verify_quasi_iso(const AlgebraContext& ctx, MapKind kind, int degree_cap = 12);

struct ClearanceReport {
  bool ok = true;
  std::size_t sequences = 0;
  std::size_t admissible = 0;
  std::size_t nonzero = 0;
  std::vector<std::string> failures;
};

// every admissible triple of single-edge classes has zero Massey product
ClearanceReport bounded_clearance(const AlgebraContext& ctx);

enum class CertificateKind { MasseyTriple, ZeroDifferential, CollapseC, PolynomialInclusion, Section, Clearance, Empty, None };
std::string certificate_kind_name(CertificateKind k);

// the theorem truth tables
bool formal_by_table(const AlgebraContext& ctx);
std::string table_clause(const AlgebraContext& ctx);

struct VerdictOptions {
  int n_bound = 4;  // certificates only up to this n
  int degree_cap = 12;
  bool certify = true;
};

struct FormalityVerdict {
  AlgebraContext ctx;
  bool formal = false;
  std::string clause;
  CertificateKind kind = CertificateKind::None;
  bool verified = false;
  std::optional<MasseyCertificate> massey;
  std::optional<QuasiIsoReport> quasi_iso;
  std::optional<ClearanceReport> clearance;
};

FormalityVerdict formality_verdict(const AlgebraContext& ctx, const VerdictOptions& opt = {});

}  // namespace ksalg
