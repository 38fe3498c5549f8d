// SPDX-License-Identifier: Apache-2.0
#include "curvtile/map_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace curvtile {

void CombMap::finish() {
    const int n = dart_count();
    vertex_of.assign(n, -1);
    n_vertices = 0;
    for (Dart d = 0; d < n; ++d) {
        if (vertex_of[d] != -1) continue;
        Dart e = d;
        do {
            vertex_of[e] = n_vertices;
            e = vnext(e);
        } while (e != d);
        ++n_vertices;
    }
    edge_of.assign(n, -1);
    n_edges = 0;
    for (Dart d = 0; d < n; ++d) {
        if (edge_of[d] != -1) continue;
        edge_of[d] = edge_of[theta[d]] = n_edges++;
    }
}

void CombMap::check_invariants() const {
    const int n = dart_count();
    if (n == 0 || n % 6 != 0)
        throw Error(Err::IntegrityFailure, "dart count must be a positive multiple of 6");
    for (Dart d = 0; d < n; ++d) {
        if (theta[d] < 0 || theta[d] >= n || nxt[d] < 0 || nxt[d] >= n)
            throw Error(Err::IntegrityFailure, "dart index out of range");
        if (theta[d] == d) throw Error(Err::IntegrityFailure, "theta has a fixed point");
        if (theta[theta[d]] != d) throw Error(Err::IntegrityFailure, "theta not an involution");
        if (nxt[nxt[nxt[d]]] != d) throw Error(Err::IntegrityFailure, "nxt orbit not a 3-cycle");
    }
    EulerStats s = euler_stats(*this);
    if (s.v - s.e + s.f != 2) throw Error(Err::NotSphere, "Euler characteristic != 2");
    for (int deg : vertex_degrees())
        if (deg < 3) throw Error(Err::LowDegree, "vertex of degree < 3");
}

std::vector<int> CombMap::vertex_degrees() const {
    std::vector<int> deg(n_vertices, 0);
    for (Dart d = 0; d < dart_count(); ++d) deg[vertex_of[d]]++;
    return deg;
}

std::vector<Dart> CombMap::darts_at_vertex(int v) const {
    std::vector<Dart> out;
    for (Dart d = 0; d < dart_count(); ++d)
        if (vertex_of[d] == v) out.push_back(d);
    return out;
}

std::vector<std::array<int, 3>> CombMap::face_triples() const {
    std::vector<std::array<int, 3>> out(face_count());
    for (int f = 0; f < face_count(); ++f)
        out[f] = {vertex_of[3 * f], vertex_of[3 * f + 1], vertex_of[3 * f + 2]};
    return out;
}

bool CombMap::is_simplicial() const {
    std::set<std::pair<int, int>> seen;
    for (Dart d = 0; d < dart_count(); ++d) {
        if (d > theta[d]) continue;
        int a = vertex_of[d], b = vertex_of[theta[d]];
        if (a == b) return false;
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

CombMap build_map(const std::vector<std::array<int, 3>>& faces) {
    const int f = (int)faces.size();
    CombMap m;
    m.theta.assign(3 * f, -1);
    m.nxt.assign(3 * f, -1);
    std::map<std::pair<int, int>, std::vector<Dart>> by_arc;
    for (int k = 0; k < f; ++k) {
        for (int j = 0; j < 3; ++j) {
            Dart d = 3 * k + j;
            m.nxt[d] = 3 * k + (j + 1) % 3;
            int u = faces[k][j], v = faces[k][(j + 1) % 3];
            by_arc[{u, v}].push_back(d);
        }
    }
    for (auto& [arc, darts] : by_arc) {
        if (darts.size() != 1)
            throw Error(Err::NonManifold, "directed adjacency used more than once");
        auto rev = by_arc.find({arc.second, arc.first});
        if (rev == by_arc.end())
            throw Error(Err::NonManifold, "adjacency used by only one face side");
        m.theta[darts[0]] = rev->second[0];
    }
    m.finish();
    // the vertex orbits must reproduce the input vertex ids (a mismatch
    // means the triples did not describe a manifold vertex star)
    {
        std::map<int, int> seen;
        for (int k = 0; k < f; ++k)
            for (int j = 0; j < 3; ++j) {
                int in = faces[k][j], orbit = m.vertex_of[3 * k + j];
                auto it = seen.find(in);
                if (it == seen.end())
                    seen[in] = orbit;
                else if (it->second != orbit)
                    throw Error(Err::NonManifold, "vertex star is not a single disk");
            }
    }
    EulerStats s = euler_stats(m);
    if (s.v - s.e + s.f != 2) throw Error(Err::NotSphere, "Euler characteristic != 2");
    for (int deg : m.vertex_degrees())
        if (deg < 3) throw Error(Err::LowDegree, "vertex of degree < 3");
    return m;
}

EulerStats euler_stats(const CombMap& m) {
    return {m.n_vertices, m.n_edges, m.face_count()};
}

std::string code_hex(const CanonicalCode& code) {
    static const char* hexd = "0123456789abcdef";
    // FNV-1a over the word; the full word is kept internally, the hex
    // digest is only for display and document metadata.
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : code) {
        for (int i = 0; i < 4; ++i) {
            h ^= (uint8_t)(x >> (8 * i));
            h *= 1099511628211ull;
        }
    }
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hexd[h & 15];
        h >>= 4;
    }
    return out;
}

namespace {

// BFS word from one start dart.  Traversal generators are nxt (or prv
// when mirrored) and theta; newly met darts are numbered in visit
// order, so the word determines the map up to isomorphism.
CanonicalCode bfs_word(const CombMap& m, Dart start, bool mirrored,
                       const std::vector<int32_t>* labels) {
    const int n = m.dart_count();
    std::vector<int32_t> num(n, -1);
    std::vector<Dart> order;
    order.reserve(n);
    num[start] = 0;
    order.push_back(start);
    CanonicalCode word;
    word.reserve(labels ? 3 * n : 2 * n);
    for (int i = 0; i < (int)order.size(); ++i) {
        Dart d = order[i];
        Dart step[2] = {mirrored ? m.prv(d) : m.nxt[d], m.theta[d]};
        for (Dart e : step) {
            if (num[e] < 0) {
                num[e] = (int32_t)order.size();
                order.push_back(e);
            }
            word.push_back(num[e]);
        }
        if (labels) word.push_back((*labels)[d]);
    }
    return word;
}

} // namespace

CanonicalCode canonical_code(const CombMap& m,
                             const std::vector<int32_t>* labels,
                             IsoGroup group) {
    CanonicalCode best;
    for (int mir = 0; mir < (group == IsoGroup::full ? 2 : 1); ++mir) {
        for (Dart d = 0; d < m.dart_count(); ++d) {
            CanonicalCode w = bfs_word(m, d, mir == 1, labels);
            if (best.empty() || w < best) best = std::move(w);
        }
    }
    return best;
}

CombMap mirror_map(const CombMap& m) {
    auto triples = m.face_triples();
    for (auto& t : triples) std::swap(t[1], t[2]);
    return build_map(triples);
}

namespace {

// Vertex splitting: replace vertex w by an edge w-w2; the ring arc
// n[i]..n[j] stays on w, the complementary arc (sharing the endpoints
// n[i], n[j]) moves to w2, and two new faces (w2,n[i],w), (w,n[j],w2)
// close the star.  Every simplicial triangulation with v >= 5 arises
// this way from one with v - 1 vertices.
std::vector<std::array<int, 3>> split_vertex(const std::vector<std::array<int, 3>>& triples,
                                             int n_vertices, int w,
                                             const std::vector<int>& ring,
                                             int i, int j) {
    const int w2 = n_vertices;
    const int k = (int)ring.size();
    const int len1 = (j - i + k) % k;
    std::vector<std::array<int, 3>> out;
    for (const auto& t : triples)
        if (t[0] != w && t[1] != w && t[2] != w) out.push_back(t);
    for (int p = 0; p < k; ++p) {
        int rel = (p - i + k) % k;
        int center = (rel < len1) ? w : w2;
        out.push_back({center, ring[p], ring[(p + 1) % k]});
    }
    out.push_back({w2, ring[i], w});
    out.push_back({w, ring[j], w2});
    return out;
}

} // namespace

std::vector<CombMap> enumerate_triangulations(int f, int ceiling) {
    if (f < 4 || f % 2 != 0 || f > ceiling)
        throw Error(Err::OutOfRange, "face count must be even, 4 <= f <= ceiling");
    // v = f/2 + 2 by Euler
    const int target_v = f / 2 + 2;
    std::vector<CombMap> level;
    level.push_back(build_map({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}));
    for (int v = 4; v < target_v; ++v) {
        std::set<CanonicalCode> seen;
        std::vector<CombMap> next;
        for (const CombMap& m : level) {
            auto triples = m.face_triples();
            for (int w = 0; w < m.n_vertices; ++w) {
                // neighbor ring of w in rotation order
                std::vector<int> ring;
                Dart d0 = m.darts_at_vertex(w)[0];
                Dart d = d0;
                do {
                    ring.push_back(m.vertex_of[m.theta[d]]);
                    d = m.vnext(d);
                } while (d != d0);
                int k = (int)ring.size();
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j) {
                        // degrees of w and w2 are len1+2 and k-len1+2
                        int len1 = (j - i + k) % k;
                        if (len1 < 1 || len1 > k - 1) continue;
                        CombMap cand;
                        try {
                            cand = build_map(split_vertex(triples, m.n_vertices, w, ring, i, j));
                        } catch (const Error&) {
                            continue;
                        }
                        if (!cand.is_simplicial()) continue;
                        CanonicalCode code = canonical_code(cand, nullptr, IsoGroup::full);
                        if (seen.insert(code).second) next.push_back(std::move(cand));
                    }
                }
            }
        }
        level = std::move(next);
    }
    // deterministic order
    std::vector<std::pair<CanonicalCode, int>> keyed;
    for (int i = 0; i < (int)level.size(); ++i)
        keyed.push_back({canonical_code(level[i], nullptr, IsoGroup::full), i});
    std::sort(keyed.begin(), keyed.end());
    std::vector<CombMap> out;
    for (auto& [code, i] : keyed) out.push_back(std::move(level[i]));
    return out;
}

} // namespace curvtile
