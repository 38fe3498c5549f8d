// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvtile {

// The four side kinds: general, h-symmetric, r-symmetric, straight arc.
enum class Kind : uint8_t { G, H, R, A };

// One side of a curvilinear edge as read along a particular dart.
//   side: which side of the curve the face lies on (G, H only)
//   chir: direction of the curve relative to the dart (G, R only)
//   cls:  curve class; the two darts of an edge always share it, and
//         distinct classes (r vs r', a vs a') never glue.
struct SideLabel {
    Kind kind = Kind::A;
    bool bar = false;  // side flag; false = plain
    bool neg = false;  // chirality flag; false = +
    int cls = 0;

    SideLabel() = default;
    SideLabel(Kind k, bool b, bool n, int c) : kind(k), bar(b), neg(n), cls(c) {
        normalize();
    }
    void normalize() {
        if (kind == Kind::R || kind == Kind::A) bar = false;
        if (kind == Kind::H || kind == Kind::A) neg = false;
    }
    friend bool operator==(const SideLabel&, const SideLabel&) = default;
};

// Letterwise reflection: what a mirror placement reads on each side.
// A and H curves are their own mirror images; mirroring reverses the
// reading direction of G and R curves.  (The paper pins the R part via
// rrr -> r-1r-1r-1; the G and H parts are pinned by the tilings of
// Propositions 2 and 5 and by the companion-pair words.)
SideLabel sigma(SideLabel l);

// The side-to-side gluing law for the two darts of one edge.
//   G: side flags differ and chirality flags differ
//   H: side flags differ
//   R: chirality flags equal
//   A: always
// plus equal kind and curve class in every case.
bool darts_match(const SideLabel& a, const SideLabel& b);

struct WordEntry {
    int corner; // 1, 2 or 3, at the entry's start vertex
    SideLabel label;
    friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

// A congruence class of curvilinear triangles: a cyclic word of three
// (corner, side) entries read counterclockwise; entry i carries the
// side from its corner to the next entry's corner.
struct Prototile {
    std::array<WordEntry, 3> word;
    std::string name; // display name, e.g. "g gb r"

    const WordEntry& entry(int i) const { return word[((i % 3) + 3) % 3]; }
    // label on the side leaving corner c
    SideLabel label_from(int c) const;
    bool has_distinguished_edge() const; // the 2-3 edge, absent for rrr, rrr-1
};

// Lemma 1 admissibility: for every G class #plain == #bar, same for H.
bool is_admissible(const Prototile& p);

// The sixteen curvilinear triangles suitable for tiling, in the
// figure's order.
const std::vector<Prototile>& catalog16();

// Looks up a catalog entry by display name; returns nullptr if absent.
const Prototile* catalog_find(const std::string& name);

// The mirror prototile: cyclic word reversed, sigma applied letterwise.
Prototile reflect(const Prototile& p);

// True iff p2 is reachable from p1 by cyclic rotation, reflection,
// corner renaming, curve class renaming within a kind, and per-class
// side/chirality convention swaps.
bool equivalent(const Prototile& p1, const Prototile& p2);

// Minimal serialized form under the same group; equal forms <=>
// equivalent prototiles.
std::vector<int32_t> prototile_normal_form(const Prototile& p);

enum class QuadGluing { aligned, mirrored };

// Boundary word of the companion pair glued along the 2-3 edge.
// mirrored is allowed only when that edge is straight.
std::array<SideLabel, 4> companion_quad(const Prototile& p, QuadGluing g);

// "r", "r-", "r2", "h", "hb", "g-", "a2", ... per-label display forms.
std::string label_name(const SideLabel& l);
std::string quad_name(const std::array<SideLabel, 4>& q);

// All distinct (rotation x mirror) placements of the word on a face,
// quotiented by exact cyclic self-symmetries (relevant for rrr).
// Each placement maps face slot j to a word entry.
struct Placement {
    std::array<WordEntry, 3> at; // slot -> (corner, label)
    bool mirrored;
    friend bool operator==(const Placement&, const Placement&) = default;
};
std::vector<Placement> face_placements(const Prototile& p);

} // namespace curvtile
