#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pp/sampler.hpp"

namespace pp::sampler::detail {

inline uint64_t pack_label(const Label& a) {
    return uint64_t(a.cls) | uint64_t(a.e) << 2 | uint64_t(a.k) << 3 |
           uint64_t(a.l) << 13 | uint64_t(a.p) << 23;
}

// Lazily memoised extension numbers EX(label, s), keyed by (label, s).
class MemoTable {
  public:
    explicit MemoTable(SampleClass c) : cls_(c) {}
    const BigInt& ex(const Label& a, int s);         // computes on demand
    const BigInt& peek(const Label& a, int s) const; // must already exist

  private:
    static uint64_t key(const Label& a, int s) {
        return pack_label(a) | uint64_t(s) << 40;
    }
    SampleClass cls_;
    std::unordered_map<uint64_t, BigInt> memo_;
};

// Flat index space for every label that can occur at one tree depth.  The
// box half-perimeter W + H grows by at most one per step, so depth d labels
// satisfy a budget of S = d + 2:  T/L labels have k+l+p <= S, B labels have
// k+p <= S with 1 <= l <= k-1.  Blocks: (T,n) (T,y) (L,n) (L,y) (B,n) (B,y),
// each sliced by a = k-1 (k-2 for B) into contiguous runs.
class Domain {
  public:
    Domain(SampleClass c, int S);

    size_t size() const { return total_; }
    int budget() const { return S_; }
    size_t index(const Label& a) const;

    // npos for labels outside the budget.  The transition evaluates every
    // (label, e) cell of the product domain, including padding cells no walk
    // can reach; their phantom children must read as weight zero instead of
    // indexing out of bounds.
    static constexpr size_t npos = size_t(-1);
    size_t checked_index(const Label& a) const;

    struct Slab {
        uint8_t blk;  // 2*cls + e
        int a;
        size_t start;
    };
    const std::vector<Slab>& slabs() const { return slabs_; }

    // Visit the slab's labels in index order: f(label, flat_index).
    template <typename F>
    void visit_slab(const Slab& sl, F f) const {
        size_t idx = sl.start;
        uint8_t cls = sl.blk >> 1;
        bool e = sl.blk & 1;
        int a = sl.a;
        if (three_) {
            int M = cls == 0 ? M_ : ML_;
            for (int b = 0; b <= M - a; ++b)
                f(Label{cls, e, a + 1, cls == 0 ? b : b + 1, 0}, idx++);
        } else if (cls < 2) {
            for (int b = 0; b + a <= M_; ++b)
                for (int c = 0; a + b + c <= M_; ++c)
                    f(cls == 0 ? Label{0, e, a + 1, b, c + 1}
                               : Label{1, e, a + 1, b + 1, c},
                      idx++);
        } else {
            for (int c = 0; a + c <= MB_; ++c)
                for (int d = 0; d <= a; ++d) f(Label{2, e, a + 2, d + 1, c + 2}, idx++);
        }
    }

  private:
    static size_t tri2(long long x) {  // #pairs (b,c) >= 0 with b+c <= x
        return x < 0 ? 0 : size_t((x + 1) * (x + 2) / 2);
    }
    static size_t tri3(long long x) {  // #triples with sum <= x
        return x < 0 ? 0 : size_t((x + 1) * (x + 2) / 2 * (x + 3) / 3);
    }

    bool three_ = false;
    int S_ = 0, M_ = 0, ML_ = 0, MB_ = 0;
    size_t block_off_[6] = {};
    std::vector<size_t> boffB_;  // per-a offsets inside a B block
    size_t total_ = 0;
    std::vector<Slab> slabs_;
};

// One level of the slice sweep: extension numbers for all labels of a fixed
// remaining-step count, over the matching depth domain.
struct Slice {
    Domain dom;
    std::vector<BigInt> ex;
};

// ex_next[parent] = sum of ex over the parent's children (child values in
// `prev`).  Range sums use prefix tables, so the cost is O(domain size).
void transition(SampleClass cls, const Slice& prev, Slice& next, int jobs);

struct DescentState {
    std::mt19937_64 rng;
    Label lab;
    BigInt weight;  // EX(lab, steps still to take)
    GrowingPolygon geo;
};

// One sampling step: draw r uniform below the node weight, walk the children
// in canonical order.  `wf(label)` returns the child's extension number.
template <typename WeightFn>
void select_child(SampleClass cls, DescentState& st, std::vector<Child>& buf,
                  WeightFn wf) {
    children(cls, st.lab, buf);
    BigInt r = uniform_below(st.rng, st.weight);
    for (const Child& ch : buf) {
        const BigInt& w = wf(ch.label);
        if (r < w) {
            st.lab = ch.label;
            st.weight = w;
            st.geo.apply(ch.step);
            return;
        }
        r -= w;
    }
    throw std::logic_error("sampler: extension numbers are inconsistent");
}

void descend_memo(SampleClass cls, int m, std::vector<DescentState>& batch, int jobs);
void descend_slices(SampleClass cls, int m, std::vector<DescentState>& batch, int jobs);

BigInt tree_total(SampleClass cls, int m);  // level count via rolling sweep

}  // namespace pp::sampler::detail
