#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pp/chisq.hpp"
#include "pp/oracle.hpp"
#include "pp/rational.hpp"

namespace pp::sampler {

enum class SampleClass { kTwo, kThree, kAll };

const char* class_name(SampleClass c);

// Generating-tree label (a,e,k,l,p).  Two-sided labels are (T,e,k), three-
// sided ones (a,e,k,l); unused parameters stay 0.
struct Label {
    uint8_t cls = 0;  // 0 = T, 1 = L, 2 = B
    bool e = false;
    int k = 0, l = 0, p = 0;
    friend bool operator==(const Label&, const Label&) = default;
};

// The six construction steps.  A step adds one unit of half-perimeter.
enum class StepType : uint8_t {
    kNewTopRow = 1,     // len cells, flush right with the box
    kExtendTopLeft,     // one cell left of the top row
    kNewLeftCol,        // len cells, flush top
    kExtendColDown,     // one cell below the leftmost column
    kNewBottomRow,      // len cells, flush left with the box
    kExtendBottomRight  // one cell right of the bottom row
};

struct Step {
    StepType type;
    int len = 0;  // only for kNew* steps
};

struct Child {
    Label label;
    Step step;
};

Label root_label(SampleClass c);

// Children of `lab` in canonical order (the order fixes the sampler's
// random stream, so it must never change).
void children(SampleClass c, const Label& lab, std::vector<Child>& out);

// Cell-set geometry of a polygon under construction.  Starts as the unit
// square at (0,0); the box only ever grows left, up and down, so the box
// right edge stays at x = 0.
class GrowingPolygon {
  public:
    GrowingPolygon();
    void apply(const Step& st);
    const oracle::Cells& cells() const { return cells_; }

  private:
    oracle::Cells cells_;
    int xmin_ = 0, ymin_ = 0, ymax_ = 0;  // box; xmax is always 0
    int top_len_ = 1;                     // top row is [-(top_len-1)..0] x {ymax}
    int col_bottom_ = 0;                  // lowest y of the leftmost column
    int bottom_len_ = 1;                  // bottom row is [xmin..xmin+len-1] x {ymin}
};

uint64_t splitmix64(uint64_t x);

// Stable 64-bit hash of a cell set (sorted before hashing).
uint64_t cells_hash(const oracle::Cells& cells);

// Uniform integer in [0, n) drawn from 64-bit words with rejection.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& n);

// Number of class members of half-perimeter m (= nodes on tree level m-2).
BigInt level_count(SampleClass c, int m);

// All members of half-perimeter m as sorted cell sets, via tree descent.
std::vector<oracle::Cells> descend_all(SampleClass c, int m);

// Extension-number backend: kMemo keeps a (label, steps-left) hash map,
// kSlices streams per-level vectors with sqrt-spaced checkpoints.  kAuto
// picks kSlices for large m where the memo would not fit comfortably.
enum class Tier { kAuto, kMemo, kSlices };

struct SampledPolygon {
    oracle::Cells cells;  // sorted
    int half_perimeter = 0;
    uint64_t index = 0;
};

inline constexpr char kGeneratorId[] = "mt19937_64/splitmix64-v1";
inline constexpr int kMaxHalfPerimeterTwoThree = 300;
inline constexpr int kMaxHalfPerimeterAll = 80;

// `count` polygons of half-perimeter m, uniformly and independently.
// Sample i is driven by mt19937_64(splitmix64(master_seed + i)), so results
// depend only on (class, m, master_seed, index) -- not on count, jobs or
// tier.
std::vector<SampledPolygon> sample(SampleClass c, int m, int count,
                                   uint64_t master_seed, int jobs = 1,
                                   Tier tier = Tier::kAuto);

// Chi-square test of `nsamples` draws against the uniform distribution on
// the whole class, binned by cell-set hash.  Only classes small enough to
// bin exhaustively (count <= 10^4) are accepted.
stats::Uniformity uniformity_test(SampleClass c, int m, int nsamples,
                                  uint64_t master_seed);

}  // namespace pp::sampler
