#include "pp/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "sampler_tables.hpp"

namespace pp::sampler {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t cells_hash(const oracle::Cells& cells) {
    oracle::Cells s = cells;
    std::sort(s.begin(), s.end());
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& [x, y] : s) {
        mix(uint64_t(int64_t(x)));
        mix(uint64_t(int64_t(y)));
    }
    return h;
}

BigInt uniform_below(std::mt19937_64& rng, const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    if (n == 1) return 0;  // no entropy consumed
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    uint64_t top_mask = bits % 64 ? (uint64_t(1) << bits % 64) - 1 : ~uint64_t(0);
    for (;;) {
        BigInt r;
        for (size_t w = 0; w < words; ++w) {
            uint64_t x = rng();
            if (w == 0) x &= top_mask;
            mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
            mpz_add_ui(r.get_mpz_t(), r.get_mpz_t(), (unsigned long)x);
        }
        if (r < n) return r;
    }
}

BigInt level_count(SampleClass c, int m) {
    if (m < 2) throw std::invalid_argument("level_count: need m >= 2");
    return detail::tree_total(c, m);
}

namespace {

void dfs(SampleClass c, const Label& lab, const GrowingPolygon& geo, int depth,
         std::vector<oracle::Cells>& out) {
    if (depth == 0) {
        oracle::Cells cells = geo.cells();
        std::sort(cells.begin(), cells.end());
        out.push_back(std::move(cells));
        return;
    }
    std::vector<Child> ch;
    children(c, lab, ch);
    for (const Child& cc : ch) {
        GrowingPolygon g = geo;
        g.apply(cc.step);
        dfs(c, cc.label, g, depth - 1, out);
    }
}

}  // namespace

std::vector<oracle::Cells> descend_all(SampleClass c, int m) {
    if (m < 2 || m > 14)
        throw std::invalid_argument("descend_all: exhaustive walk needs 2 <= m <= 14");
    std::vector<oracle::Cells> out;
    dfs(c, root_label(c), GrowingPolygon(), m - 2, out);
    return out;
}

std::vector<SampledPolygon> sample(SampleClass c, int m, int count,
                                   uint64_t master_seed, int jobs, Tier tier) {
    if (m < 2) throw std::invalid_argument("sample: need m >= 2");
    int cap = c == SampleClass::kAll ? kMaxHalfPerimeterAll : kMaxHalfPerimeterTwoThree;
    if (m > cap)
        throw std::invalid_argument("sample: half-perimeter exceeds the supported cap");
    if (count < 0) throw std::invalid_argument("sample: negative count");
    jobs = std::clamp(jobs, 1, 64);

    bool slices;
    switch (tier) {
        case Tier::kMemo: slices = false; break;
        case Tier::kSlices:
            if (c == SampleClass::kTwo)
                throw std::invalid_argument("sample: two-sided walks always use the memo tier");
            slices = true;
            break;
        default:
            slices = (c == SampleClass::kThree && m >= 60) ||
                     (c == SampleClass::kAll && m >= 30);
            break;
    }

    // Seed every walk independently of count, jobs and tier, so sample i of a
    // given master seed is reproducible under any batching.
    std::vector<detail::DescentState> batch(static_cast<size_t>(count));
    for (size_t i = 0; i < batch.size(); ++i)
        batch[i].rng.seed(splitmix64(master_seed + uint64_t(i)));
    if (!batch.empty()) {
        if (slices)
            detail::descend_slices(c, m, batch, jobs);
        else
            detail::descend_memo(c, m, batch, jobs);
    }

    std::vector<SampledPolygon> out(batch.size());
    for (size_t i = 0; i < batch.size(); ++i) {
        out[i].cells = batch[i].geo.cells();
        std::sort(out[i].cells.begin(), out[i].cells.end());
        out[i].half_perimeter = m;
        out[i].index = uint64_t(i);
    }
    return out;
}

stats::Uniformity uniformity_test(SampleClass c, int m, int nsamples,
                                  uint64_t master_seed) {
    if (nsamples < 1) throw std::invalid_argument("uniformity_test: need samples");
    BigInt total = level_count(c, m);
    if (total > 10000)
        throw std::invalid_argument("uniformity_test: class too large to bin (> 10^4)");
    long long bins = total.get_si();
    if (bins == 1) {  // degenerate level: one polygon, nothing to test
        sample(c, m, 1, master_seed);
        return stats::Uniformity{0.0, 0.0, 1.0, 1};
    }
    std::unordered_map<uint64_t, long long> counts;
    for (const SampledPolygon& p : sample(c, m, nsamples, master_seed))
        ++counts[cells_hash(p.cells)];
    if ((long long)counts.size() > bins)
        throw std::logic_error("uniformity_test: more shapes seen than the class holds");
    std::vector<long long> obs;
    obs.reserve(counts.size());
    for (const auto& [h, n] : counts) obs.push_back(n);
    return stats::uniformity(obs, bins);
}

}  // namespace pp::sampler
