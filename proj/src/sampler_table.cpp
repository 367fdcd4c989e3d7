#include "sampler_tables.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <map>
#include <thread>
#include <utility>

namespace pp::sampler::detail {

const BigInt& MemoTable::ex(const Label& a, int s) {
    uint64_t k = key(a, s);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    BigInt v;
    if (s == 0) {
        v = 1;
    } else {
        std::vector<Child> ch;
        children(cls_, a, ch);
        for (const Child& c : ch) v += ex(c.label, s - 1);
    }
    return memo_.emplace(k, std::move(v)).first->second;
}

const BigInt& MemoTable::peek(const Label& a, int s) const {
    auto it = memo_.find(key(a, s));
    if (it == memo_.end())
        throw std::logic_error("sampler: extension number missing from memo");
    return it->second;
}

Domain::Domain(SampleClass c, int S) : S_(S) {
    if (c == SampleClass::kTwo)
        throw std::invalid_argument("slice domains cover three-sided and unrestricted only");
    three_ = c == SampleClass::kThree;
    size_t off = 0;
    if (three_) {
        M_ = S - 1;   // (T,e,k,l): (k-1) + l <= S-1
        ML_ = S - 2;  // (L,e,k,l): (k-1) + (l-1) <= S-2
        for (int blk = 0; blk < 4; ++blk) {
            block_off_[blk] = off;
            int M = blk < 2 ? M_ : ML_;
            for (int a = 0; a <= M; ++a) {
                slabs_.push_back({uint8_t(blk), a, off});
                off += size_t(M - a + 1);
            }
        }
    } else {
        M_ = S - 2;   // T: (k-1)+l+(p-1) <= S-2,  L: (k-1)+(l-1)+p <= S-2
        MB_ = S - 4;  // B: (k-2)+(p-2) <= S-4, 1 <= l <= k-1
        for (int blk = 0; blk < 4; ++blk) {
            block_off_[blk] = off;
            for (int a = 0; a <= M_; ++a) {
                slabs_.push_back({uint8_t(blk), a, off});
                off += tri2(M_ - a);
            }
        }
        boffB_.assign(size_t(std::max(MB_ + 1, 0)), 0);
        size_t b = 0;
        for (int a = 0; a <= MB_; ++a) {
            boffB_[size_t(a)] = b;
            b += size_t(MB_ - a + 1) * size_t(a + 1);
        }
        for (int blk = 4; blk < 6; ++blk) {
            block_off_[blk] = off;
            for (int a = 0; a <= MB_; ++a) {
                slabs_.push_back({uint8_t(blk), a, off + boffB_[size_t(a)]});
            }
            off += b;
        }
    }
    total_ = off;
}

size_t Domain::index(const Label& a) const {
    if (three_) {
        int A = a.k - 1, B = a.cls == 0 ? a.l : a.l - 1;
        int M = a.cls == 0 ? M_ : ML_;
        assert(A >= 0 && B >= 0 && A + B <= M);
        size_t aoff = size_t(A) * size_t(M + 1) - size_t(A) * size_t(A - 1) / 2;
        return block_off_[2 * a.cls + a.e] + aoff + size_t(B);
    }
    if (a.cls < 2) {
        int A = a.k - 1;
        int B = a.cls == 0 ? a.l : a.l - 1;
        int C = a.cls == 0 ? a.p - 1 : a.p;
        assert(A >= 0 && B >= 0 && C >= 0 && A + B + C <= M_);
        int R = M_ - A;
        size_t aoff = tri3(M_) - tri3(R);
        size_t boff = size_t(B) * size_t(R + 1) - size_t(B) * size_t(B - 1) / 2;
        return block_off_[2 * a.cls + a.e] + aoff + boff + size_t(C);
    }
    int A = a.k - 2, C = a.p - 2, D = a.l - 1;
    assert(A >= 0 && C >= 0 && A + C <= MB_ && D >= 0 && D <= A);
    return block_off_[4 + a.e] + boffB_[size_t(A)] + size_t(C) * size_t(A + 1) +
           size_t(D);
}

size_t Domain::checked_index(const Label& a) const {
    if (three_) {
        int A = a.k - 1, B = a.cls == 0 ? a.l : a.l - 1;
        if (A < 0 || B < 0 || A + B > (a.cls == 0 ? M_ : ML_)) return npos;
        return index(a);
    }
    if (a.cls < 2) {
        int A = a.k - 1;
        int B = a.cls == 0 ? a.l : a.l - 1;
        int C = a.cls == 0 ? a.p - 1 : a.p;
        if (A < 0 || B < 0 || C < 0 || A + B + C > M_) return npos;
        return index(a);
    }
    int A = a.k - 2, C = a.p - 2, D = a.l - 1;
    if (A < 0 || C < 0 || A + C > MB_ || D < 0 || D > A) return npos;
    return index(a);
}

namespace {

constexpr uint8_t T = 0, L = 1, B = 2;

// Prefix tables over the child slice, one per family of range sums.
//
//   at[T,n,i,l,p] = sum over i' <= i of ex[T,n, i', l+i-i', p]      (new rows)
//   al[L,n,k,j,p] = sum over j' <= j of ex[L,n, k, j', p+j-j']      (new cols)
//   pb[B,n,k,j,p] = sum over j' <= j of ex[B,n, k, j', p]           (new rows)
void build_prefixes(SampleClass cls, const Slice& ch, std::vector<BigInt>& at,
                    std::vector<BigInt>& al, std::vector<BigInt>& pb) {
    const Domain& d = ch.dom;
    const std::vector<BigInt>& ex = ch.ex;
    at.assign(ex.size(), BigInt());
    al.assign(cls == SampleClass::kAll ? ex.size() : 0, BigInt());
    pb.assign(cls == SampleClass::kAll ? ex.size() : 0, BigInt());
    for (const Domain::Slab& sl : d.slabs()) {
        uint8_t cls_bits = sl.blk >> 1;
        if (sl.blk & 1) continue;  // prefixes only over e = n blocks
        if (cls_bits == T) {
            d.visit_slab(sl, [&](const Label& a, size_t i) {
                at[i] = ex[i];
                if (a.k >= 2) at[i] += at[d.index({T, false, a.k - 1, a.l + 1, a.p})];
            });
        } else if (cls_bits == L && cls == SampleClass::kAll) {
            d.visit_slab(sl, [&](const Label& a, size_t i) {
                al[i] = ex[i];
                if (a.l >= 2) al[i] += al[d.index({L, false, a.k, a.l - 1, a.p + 1})];
            });
        } else if (cls_bits == L) {
            d.visit_slab(sl, [&](const Label& a, size_t i) {
                at[i] = ex[i];  // reuse `at` for the plain l-prefix of (L,n,k,.)
                if (a.l >= 2) at[i] += at[d.index({L, false, a.k, a.l - 1, 0})];
            });
        } else if (cls_bits == B) {
            d.visit_slab(sl, [&](const Label& a, size_t i) {
                pb[i] = ex[i];
                if (a.l >= 2) pb[i] += pb[d.index({B, false, a.k, a.l - 1, a.p})];
            });
        }
    }
}

// The a-slab visit order inside (T,n) runs over ascending k, so at[] rows we
// read while building were completed in earlier slabs; (L,n)/(B,n) prefixes
// stay inside one slab and follow the in-slab enumeration order.

const BigInt kZero;

const BigInt& look(const Domain& d, const std::vector<BigInt>& v, const Label& la) {
    size_t i = d.checked_index(la);
    return i == Domain::npos ? kZero : v[i];
}

BigInt parent_sum_three(const Domain& d, const std::vector<BigInt>& ex,
                        const std::vector<BigInt>& at, const Label& a) {
    BigInt v;
    if (a.cls == T) {
        if (a.k >= 2) v += look(d, at, {T, false, a.k - 1, a.l + 1, 0});
        v += look(d, ex, {T, true, a.k, a.l, 0});
        if (a.e)
            v += a.l >= 1 ? look(d, ex, {T, true, a.k + 1, a.l - 1, 0})
                          : look(d, ex, {L, false, a.k + 1, 1, 0});
    } else {
        if (a.k >= 2) v += look(d, at, {T, false, a.k - 1, 1, 0});
        v += look(d, ex, {T, true, a.k, 0, 0});
        if (a.l >= 2) v += look(d, at, {L, false, a.k + 1, a.l - 1, 0});
        v += look(d, ex, {L, true, a.k + 1, a.l, 0});
        if (a.e) v += look(d, ex, {L, true, a.k, a.l + 1, 0});
    }
    return v;
}

BigInt parent_sum_all(const Domain& d, const std::vector<BigInt>& ex,
                      const std::vector<BigInt>& at, const std::vector<BigInt>& al,
                      const std::vector<BigInt>& pb, const Label& a) {
    BigInt v;
    if (a.cls == T) {
        if (a.k >= 2) v += look(d, at, {T, false, a.k - 1, a.l + 1, a.p + 1});
        v += look(d, ex, {T, true, a.k, a.l, a.p + 1});
        if (a.e)
            v += a.l >= 1 ? look(d, ex, {T, true, a.k + 1, a.l - 1, a.p})
                          : look(d, ex, {L, false, a.k + 1, 1, a.p - 1});
    } else if (a.cls == L) {
        if (a.k >= 2) v += look(d, at, {T, false, a.k - 1, 1, a.l + a.p + 1});
        v += look(d, ex, {T, true, a.k, 0, a.l + a.p + 1});
        if (a.l >= 2) v += look(d, al, {L, false, a.k + 1, a.l - 1, a.p + 1});
        v += look(d, ex, {L, true, a.k + 1, a.l, a.p});
        if (a.e)
            v += a.p >= 1 ? look(d, ex, {L, true, a.k, a.l + 1, a.p - 1})
                          : look(d, ex, {B, false, a.k, 1, a.l + 1});
    } else {
        if (a.k >= 2) v += look(d, at, {T, false, a.k - 1, 1, a.p + 1});
        v += look(d, ex, {T, true, a.k, 0, a.p + 1});
        if (a.p >= 2) v += look(d, al, {L, false, a.k + 1, a.p - 1, 1});
        v += look(d, ex, {L, true, a.k + 1, a.p, 0});
        if (a.l >= 2) v += look(d, pb, {B, false, a.k, a.l - 1, a.p + 1});
        v += look(d, ex, {B, a.k - 1 > a.l, a.k, a.l, a.p + 1});
        if (a.e) v += look(d, ex, {B, a.k - 1 > a.l + 1, a.k, a.l + 1, a.p});
    }
    return v;
}

}  // namespace

void transition(SampleClass cls, const Slice& prev, Slice& next, int jobs) {
    std::vector<BigInt> at, al, pb;
    build_prefixes(cls, prev, at, al, pb);
    const std::vector<Domain::Slab>& slabs = next.dom.slabs();
    next.ex.assign(next.dom.size(), BigInt());
    auto run = [&](const Domain::Slab& sl) {
        next.dom.visit_slab(sl, [&](const Label& a, size_t i) {
            next.ex[i] = cls == SampleClass::kThree
                             ? parent_sum_three(prev.dom, prev.ex, at, a)
                             : parent_sum_all(prev.dom, prev.ex, at, al, pb, a);
        });
    };
    if (jobs <= 1 || slabs.size() < 2) {
        for (const Domain::Slab& sl : slabs) run(sl);
        return;
    }
    std::atomic<size_t> cursor{0};
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, int(slabs.size()));
    pool.reserve(size_t(n));
    for (int i = 0; i < n; ++i)
        pool.emplace_back([&] {
            for (size_t j; (j = cursor.fetch_add(1)) < slabs.size();) run(slabs[j]);
        });
    for (std::thread& th : pool) th.join();
}

void descend_memo(SampleClass cls, int m, std::vector<DescentState>& batch,
                  int jobs) {
    int S = m - 2;
    MemoTable mt(cls);
    const Label root = root_label(cls);
    const BigInt& total = mt.ex(root, S);  // fills the closure the walks need
    for (DescentState& st : batch) {
        st.lab = root;
        st.weight = total;
    }
    auto walk = [&](DescentState& st) {
        std::vector<Child> buf;
        for (int s = S - 1; s >= 0; --s)
            select_child(cls, st, buf,
                         [&](const Label& la) -> const BigInt& { return mt.peek(la, s); });
    };
    if (jobs <= 1 || batch.size() < 2) {
        for (DescentState& st : batch) walk(st);
        return;
    }
    std::atomic<size_t> cursor{0};
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, int(batch.size()));
    pool.reserve(size_t(n));
    for (int i = 0; i < n; ++i)
        pool.emplace_back([&] {
            for (size_t j; (j = cursor.fetch_add(1)) < batch.size();) walk(batch[j]);
        });
    for (std::thread& th : pool) th.join();
}

// Memory-lean variant for long walks: keep one slice per level only inside
// the active sqrt-sized block, rebuilt from checkpoints saved on the way up.
void descend_slices(SampleClass cls, int m, std::vector<DescentState>& batch,
                    int jobs) {
    int S = m - 2;
    int K = std::max(1, int(std::lround(std::sqrt(double(std::max(S, 1))))));
    const Label root = root_label(cls);

    std::map<int, std::vector<BigInt>> checkpoint;
    Slice cur{Domain(cls, S + 2), {}};
    cur.ex.assign(cur.dom.size(), BigInt(1));  // EX(., 0) = 1
    if (S > 0) checkpoint[0] = cur.ex;
    for (int s = 1; s <= S; ++s) {
        Slice next{Domain(cls, S - s + 2), {}};
        transition(cls, cur, next, jobs);
        cur = std::move(next);
        if (s % K == 0 && s < S) checkpoint[s] = cur.ex;
    }
    const BigInt total = cur.ex[cur.dom.index(root)];
    for (DescentState& st : batch) {
        st.lab = root;
        st.weight = total;
    }

    std::map<int, Slice> block;  // levels of the block currently in play
    int cur_block = -1;
    std::vector<Child> buf;
    for (int s = S - 1; s >= 0; --s) {
        int j = s / K;
        if (j != cur_block) {
            block.clear();
            int s0 = j * K;
            auto node = checkpoint.extract(s0);
            Slice base{Domain(cls, S - s0 + 2), std::move(node.mapped())};
            block.emplace(s0, std::move(base));
            for (int t = s0 + 1; t <= s; ++t) {
                Slice next{Domain(cls, S - t + 2), {}};
                transition(cls, block.at(t - 1), next, jobs);
                block.emplace(t, std::move(next));
            }
            cur_block = j;
        }
        const Slice& sl = block.at(s);
        for (DescentState& st : batch)
            select_child(cls, st, buf, [&](const Label& la) -> const BigInt& {
                return sl.ex[sl.dom.index(la)];
            });
    }
}

BigInt tree_total(SampleClass cls, int m) {
    int S = m - 2;
    if (cls == SampleClass::kTwo) {
        MemoTable mt(cls);
        return mt.ex(root_label(cls), S);
    }
    Slice cur{Domain(cls, S + 2), {}};
    cur.ex.assign(cur.dom.size(), BigInt(1));
    for (int s = 1; s <= S; ++s) {
        Slice next{Domain(cls, S - s + 2), {}};
        transition(cls, cur, next, 1);
        cur = std::move(next);
    }
    return cur.ex[cur.dom.index(root_label(cls))];
}

}  // namespace pp::sampler::detail
