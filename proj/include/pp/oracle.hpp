#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pp::oracle {

// Brute-force enumeration of prudent polygons as rooted boundary walks.
// A walk starts at (0,0), takes 2m-1 unit steps, and ends on a vertex
// adjacent to the origin; the closing edge back to (0,0) is implicit.

using Vertex = std::pair<int, int>;
using Cells = std::vector<std::pair<int, int>>;  // sorted lexicographically

enum ClassFlag : unsigned {
    kOne = 1u,
    kTwo = 2u,
    kThree = 4u,
    kAll = 8u,
    kClassF = 16u,  // endpoint (1,0) reached via (1,1)
};

enum class PPClass { one, two, three, all, classF };

struct PolygonRecord {
    Cells cells;
    Vertex endpoint{};
    bool clockwise = false;
    unsigned classes = 0;
    int half_perimeter = 0;
};

struct EnumerateResult {
    long long count = 0;
    std::vector<PolygonRecord> records;  // filled only when collect=true
};

// cap = 0 picks the class default (14 for one/two/three, 10 for all/classF).
EnumerateResult enumerate(int m, PPClass cls, bool collect = false, int cap = 0);

// Walk-level predicates. A walk is the vertex sequence without the closing
// edge; walks of fewer than three steps are rejected.
bool is_prudent(const std::vector<Vertex>& walk);

// Class bitmask of a closed prudent walk; throws std::domain_error if the
// walk is not a valid prudent polygon boundary.
unsigned classify(const std::vector<Vertex>& walk);

// Enclosed cells of a closed walk (scanline over vertical edges).
Cells cells_from_walk(const std::vector<Vertex>& walk);

// Signed area of the closed walk (shoelace); negative means clockwise.
long long signed_area(const std::vector<Vertex>& walk);

// Reconstruct the boundary walk of a cell set, cut at the edge from
// `endpoint` to (0,0).  The orientation is implied by the cut; a request
// for the opposite one is a domain error, as are cell sets that are not
// simply connected or whose boundary misses (0,0) or the closing edge.
std::vector<Vertex> extract_boundary_walk(const Cells& cells, Vertex endpoint,
                                          bool clockwise);

// Distinct cell sets modulo translation (per-shape count, e.g. class one).
long long count_shapes(const std::vector<PolygonRecord>& records);

}  // namespace pp::oracle
