#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "totalcolor/graph.hpp"

namespace totalcolor {

/// Color ids are dense small integers starting at 0.
using Color = int;

/// Vertex and edge colors over one graph. Unset entries are empty
/// optionals, so an incomplete coloring is never mistaken for a wrong one.
struct TotalColoring
{
  std::vector<std::optional<Color>> vertex_colors;
  std::vector<std::optional<Color>> edge_colors;  // indexed by edge index

  TotalColoring() = default;
  explicit TotalColoring(const Graph& g)
    : vertex_colors(g.vertex_count()), edge_colors(g.edge_count())
  {}

  bool complete() const;
  int unset_count() const;
  /// max id + 1 over the ids in use (0 when nothing is set).
  int palette_size() const;
  bool sized_for(const Graph& g) const
  {
    return static_cast<int>(vertex_colors.size()) == g.vertex_count() &&
           static_cast<int>(edge_colors.size()) == g.edge_count();
  }
};

enum class ViolationKind
{
  VertexVertex,  // first, second: adjacent vertices
  VertexEdge,    // first: vertex, second: incident edge
  EdgeEdge,      // first, second: edges sharing an endpoint
};

struct Violation
{
  ViolationKind kind;
  int first;
  int second;
  Color color;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Graph& g, const Violation& v);

struct VerifyReport
{
  std::vector<Violation> violations;
  int palette = 0;

  bool valid() const { return violations.empty(); }
};

/// Lists every conflicting pair. Throws std::invalid_argument if the
/// coloring is incomplete or sized for a different graph.
VerifyReport verify_total(const Graph& g, const TotalColoring& c);

/// Color classes of the vertices.
struct VertexPartition
{
  std::vector<std::vector<int>> classes;

  std::size_t size() const { return classes.size(); }
  /// class index per vertex, -1 for vertices in no class. Throws if a
  /// vertex appears twice.
  std::vector<int> class_of(int vertex_count) const;
  bool covers(int vertex_count) const;
};

/// Adjacent pairs that share a class.
std::vector<std::pair<int, int>> dependent_pairs(const Graph& g, const VertexPartition& p);

struct Matching
{
  std::vector<int> edges;  // edge indices, increasing
  bool perfect = false;
};

/// A matching whose edges take the color of a vertex class.
struct ClassMatching
{
  Matching matching;
  int color_class;
};

class MergeError : public std::runtime_error
{
public:
  MergeError(const std::string& what, int edge) : std::runtime_error(what), edge_(edge) {}
  int edge() const { return edge_; }

private:
  int edge_;
};

/// Vertex class i gets color i. Each class matching colors its edges with
/// its class color. Remainder colors are local ids shifted past the vertex
/// classes. The result is incomplete when edges are left over. Throws
/// MergeError naming the offending edge when a placement breaks a
/// vertex-edge or edge-edge constraint, or colors an edge twice.
TotalColoring merge_partial_total(const Graph& g, const VertexPartition& base,
                                  std::span<const ClassMatching> matchings,
                                  std::span<const std::pair<int, Color>> remainder);

}  // namespace totalcolor
