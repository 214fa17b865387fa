#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlsnf/bigint.hpp"

namespace nlsnf {

struct NotAPath : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Disconnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicateL : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IncompatibleGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex of the universal graph: an integer vector a in Z^m with
// augmentation eta(a) = sum of coordinates in {0, -2}.  The sign is derived:
// + iff eta(a) = 0.
using UniversalVertex = std::vector<int>;

int eta(const UniversalVertex& a);
int vertex_sign(const UniversalVertex& a);  // +1 or -1
int l1_norm(const UniversalVertex& a);

enum class EdgeColor : unsigned char { Black, Red };

// Marking (i,j) on an edge; black edges are oriented (reversing the
// orientation swaps the marking), red edges are not and store i < j.
struct Marking {
    int i = 0, j = 0;
    bool oriented = false;  // true for black
};

struct GraphEdge {
    int u = 0, v = 0;  // vertex ids; for black edges the marking reads u -> v
    EdgeColor color = EdgeColor::Black;
    int i = 0, j = 0;  // marking; i < j for red
};

// Abstract colored marked graph.  Vertex signs are optional declarations;
// for compatible graphs they are recomputed from the edge structure.
struct ColoredMarkedGraph {
    int num_vertices = 0;
    std::vector<int> declared_sign;  // +1/-1, or 0 when unknown; may be empty
    std::vector<GraphEdge> edges;
    std::optional<int> root;

    std::vector<std::vector<std::pair<int, int>>> adjacency() const;  // (neighbor, edge index)
};

struct PathData {
    int sign = 1;             // +1 even number of red edges, -1 odd
    std::vector<int> L;       // in Z^m
};

// Combinatorial edge rules of the universal graph: black iff the signs agree
// and b - a = e_i - e_j; red iff the signs are opposite and
// a + b + e_i + e_j = 0.  At most one edge exists per pair.
std::optional<std::pair<EdgeColor, Marking>> edge_between(const UniversalVertex& a, const UniversalVertex& b);

// sign/L data of a path given as a vertex id sequence
PathData path_data(const ColoredMarkedGraph& g, const std::vector<int>& path, int m);

struct CompatibilityResult {
    bool compatible = false;
    std::vector<int> witness_circuit;       // vertex ids of a violating circuit, empty on PASS
    std::vector<int> sigma;                 // per-vertex sign w.r.t. the chosen root
    std::vector<std::vector<int>> L;        // per-vertex L w.r.t. the chosen root
};

// PASS iff every fundamental circuit has sign + and L = 0.
CompatibilityResult check_compatible(const ColoredMarkedGraph& g, int m);

// Embedding a -> -L_r(a) into the universal graph (root maps to 0).
std::vector<UniversalVertex> embed_universal(const ColoredMarkedGraph& g, int root, int m);

// A complete (full-subgraph) set of universal vertices; edges are implied.
struct UniversalSet {
    std::vector<UniversalVertex> verts;  // sorted, all same length m

    int m() const { return verts.empty() ? 0 : static_cast<int>(verts[0].size()); }
    ColoredMarkedGraph to_graph() const;  // ids follow vertex order; root = index of the zero vector if present
    std::vector<GraphEdge> edges() const;
    bool connected() const;
    int rank() const;  // rank of the lattice spanned by the vertices
    bool has_adjacent_black_red_same_marking() const;  // realizable only in the special component
};

UniversalSet make_universal_set(std::vector<UniversalVertex> verts);

// Canonical key under index permutations, translations and sign change
// (equivalently: all re-rootings composed with support relabelings).
std::string canonical_form(const UniversalSet& s);

// All connected complete subgraphs of the universal graph over m indices with
// at most max_vertices vertices, one canonical representative per symmetry
// class.  Deterministic order.
std::vector<UniversalSet> enumerate_universal(int m, int max_vertices);

// The normal-form block catalog: connected, complete, non-degenerate
// (#vertices = rank + 1) graphs with <= n+1 vertices, excluding the
// adjacent black/red same-marking patterns that only realize in the special
// component.
std::vector<UniversalSet> enumerate_blocks(int n, int m);

enum class EncodingType {
    Type0,
    Type1,
    Type2,
    Type3,
    TypeA,
    TypeBI,
    TypeBII,
    Circuit4,
    Small,
    Other,
};
std::string encoding_type_name(EncodingType t);

// Shape of the multigraph on site indices spanned by the markings.
EncodingType encoding_graph(const UniversalSet& s);

}  // namespace nlsnf
