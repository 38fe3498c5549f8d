// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvtile {

enum class Err {
    NonManifold,
    NotSphere,
    LowDegree,
    OutOfRange,
    BadN,
    BadPrototile,
    NoCompanion,
    IllegalGluing,
    IllegalDiagonal,
    NotEarthMap,
    IllegalAction,
    BudgetExceeded,
    SchemaMismatch,
    IntegrityFailure,
};

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

using Dart = int;

// Dart-based combinatorial map of a closed orientable triangle-faced
// surface.  Darts are dense ids 0..3f-1; dart 3k+j is the j-th side of
// face k.  theta pairs the two darts of an edge (fixed-point-free
// involution), nxt is the counterclockwise successor within a face
// (every orbit a 3-cycle).  Vertices are the orbits of
// d -> theta(nxt(nxt(d))), i.e. the darts leaving one vertex.
struct CombMap {
    std::vector<Dart> theta;
    std::vector<Dart> nxt;

    // derived, filled by finish()
    std::vector<int> vertex_of;   // origin vertex of each dart
    std::vector<int> edge_of;     // edge id = min dart of the theta orbit
    int n_vertices = 0;
    int n_edges = 0;

    int dart_count() const { return (int)theta.size(); }
    int face_count() const { return dart_count() / 3; }
    int face_of(Dart d) const { return d / 3; }
    Dart prv(Dart d) const { return nxt[nxt[d]]; }
    // next dart counterclockwise around the origin vertex of d
    Dart vnext(Dart d) const { return theta[prv(d)]; }

    void finish();                      // computes vertex/edge tables
    void check_invariants() const;      // throws Error on violation

    std::vector<int> vertex_degrees() const;
    std::vector<Dart> darts_at_vertex(int v) const;

    // faces as vertex triples, in dart order (for rebuilds and I/O)
    std::vector<std::array<int, 3>> face_triples() const;

    bool is_simplicial() const;         // no loops, no parallel edges
};

struct EulerStats {
    int v, e, f;
};

// Builds the map of a closed triangle complex from counterclockwise
// vertex triples.  Throws NonManifold / NotSphere / LowDegree.
CombMap build_map(const std::vector<std::array<int, 3>>& faces);

EulerStats euler_stats(const CombMap& m);

enum class IsoGroup { oriented, full };

using CanonicalCode = std::vector<int32_t>;

std::string code_hex(const CanonicalCode& code);

// Lexicographically minimal BFS word over all start darts (and both
// orientations when group == full).  Equal codes <=> isomorphic maps,
// label-preserving when a per-dart label vector is given.
CanonicalCode canonical_code(const CombMap& m,
                             const std::vector<int32_t>* labels,
                             IsoGroup group);

// The mirror map: same darts, faces traversed the other way round.
CombMap mirror_map(const CombMap& m);

// All simplicial sphere triangulations with f faces and minimum vertex
// degree 3, one representative per isomorphism class (reflections
// included), sorted by canonical code.  Generation is by repeated
// vertex splitting from the tetrahedron.
std::vector<CombMap> enumerate_triangulations(int f, int ceiling = 16);

} // namespace curvtile
