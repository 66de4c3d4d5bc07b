#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ksalg/algebra.hpp"

namespace ksalg {

struct EdgeLabel {
  Gen kind = Gen::U;
  int line = 1;
  std::string to_string() const;  // "R1", "U3", ...
  static EdgeLabel parse(std::string_view s);
  bool operator==(const EdgeLabel&) const = default;
};

struct Edge {
  EdgeLabel label;
  IState target;
  bool operator==(const Edge&) const = default;
};

// Where an edge with this label leads from x; nullopt when it cannot be traversed.
std::optional<IState> traverse(const IState& x, const EdgeLabel& e);

class Path {
 public:
  Path() = default;
  explicit Path(IState start, std::vector<EdgeLabel> edges = {});  // replays and validates

  const IState& start() const { return start_; }
  const std::vector<EdgeLabel>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  IState end() const;
  std::vector<IState> vertices() const;  // start, then the state after each edge

  Path then(const Path& o) const;  // concatenation, this first
  Path prefix(std::size_t len) const;
  Path suffix(std::size_t from) const;

  std::string to_string() const;  // "{0}:R1,R2"
  static Path parse(std::string_view text, int n);
  bool operator==(const Path&) const = default;

 private:
  IState start_;
  std::vector<EdgeLabel> edges_;
};

std::vector<Edge> edges_from(const AlgebraContext& ctx, const IState& x);

struct PathCounts {
  std::vector<int> rho;     // rho[i-1] = number of R_i edges
  std::vector<int> lambda;  // lambda[i-1] = number of L_i edges
};
PathCounts path_counts(const Path& p);

// true when every vertex is admissible and every C label lies in S
bool path_in_context(const AlgebraContext& ctx, const Path& p);

Element normalize(const AlgebraContext& ctx, const Path& p);
Path canonical_path(const AlgebraContext& ctx, const IState& x, const IState& y);

enum class RelationFamily { R, Rtilde, RtildeS };
enum class RelationKind { UCentral, Loop, DistantCommutation, TwoLinePass, UVanishing, CSquare, CCentral, TruncationExtra };
std::string relation_kind_name(RelationKind k);

struct Relation {
  RelationKind kind;
  std::vector<Path> terms;  // the relation is the sum of these paths
  std::string to_string() const;
};

std::vector<Relation> relation_elements(const AlgebraContext& ctx, RelationFamily family);
RelationFamily default_family(const AlgebraContext& ctx);

struct PresentationReport {
  bool ok = true;
  std::size_t relations = 0;
  std::size_t pairs = 0;
  std::size_t edges = 0;
  std::size_t segments = 0;
  std::vector<std::string> failures;
};

PresentationReport verify_presentation(const AlgebraContext& ctx);

std::string to_dot(const AlgebraContext& ctx);

}  // namespace ksalg
