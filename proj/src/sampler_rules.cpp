#include <stdexcept>

#include "pp/sampler.hpp"

namespace pp::sampler {

namespace {

constexpr uint8_t T = 0, L = 1, B = 2;

Label lab(uint8_t cls, bool e, int k, int l = 0, int p = 0) {
    return Label{cls, e, k, l, p};
}

Step step(StepType t, int len = 0) { return Step{t, len}; }

void two_sided(const Label& a, std::vector<Child>& out) {
    for (int i = 1; i < a.k; ++i)
        out.push_back({lab(T, false, i), step(StepType::kNewTopRow, i)});
    out.push_back({lab(T, true, a.k), step(StepType::kNewTopRow, a.k)});
    if (a.e) out.push_back({lab(T, true, a.k + 1), step(StepType::kExtendTopLeft)});
}

void three_sided(const Label& a, std::vector<Child>& out) {
    int k = a.k, l = a.l;
    if (a.cls == T) {
        for (int i = 1; i < k; ++i)
            out.push_back({lab(T, false, i, l + k - i), step(StepType::kNewTopRow, i)});
        out.push_back({lab(T, true, k, l), step(StepType::kNewTopRow, k)});
        if (a.e) {
            if (l >= 1)
                out.push_back({lab(T, true, k + 1, l - 1), step(StepType::kExtendTopLeft)});
            else
                out.push_back({lab(L, false, k + 1, 1), step(StepType::kExtendTopLeft)});
        }
    } else {
        for (int i = 1; i < k; ++i)
            out.push_back({lab(T, false, i, k - i), step(StepType::kNewTopRow, i)});
        out.push_back({lab(T, true, k, 0), step(StepType::kNewTopRow, k)});
        for (int i = 1; i < l; ++i)
            out.push_back({lab(L, false, k + 1, i), step(StepType::kNewLeftCol, i)});
        out.push_back({lab(L, true, k + 1, l), step(StepType::kNewLeftCol, l)});
        if (a.e) out.push_back({lab(L, true, k, l + 1), step(StepType::kExtendColDown)});
    }
}

void unrestricted(const Label& a, std::vector<Child>& out) {
    int k = a.k, l = a.l, p = a.p;
    switch (a.cls) {
        case T:
            for (int i = 1; i < k; ++i)
                out.push_back({lab(T, false, i, l + k - i, p + 1), step(StepType::kNewTopRow, i)});
            out.push_back({lab(T, true, k, l, p + 1), step(StepType::kNewTopRow, k)});
            if (a.e) {
                if (l >= 1)
                    out.push_back({lab(T, true, k + 1, l - 1, p), step(StepType::kExtendTopLeft)});
                else
                    out.push_back({lab(L, false, k + 1, 1, p - 1), step(StepType::kExtendTopLeft)});
            }
            break;
        case L:
            for (int i = 1; i < k; ++i)
                out.push_back({lab(T, false, i, k - i, l + p + 1), step(StepType::kNewTopRow, i)});
            out.push_back({lab(T, true, k, 0, l + p + 1), step(StepType::kNewTopRow, k)});
            for (int i = 1; i < l; ++i)
                out.push_back({lab(L, false, k + 1, i, l + p - i), step(StepType::kNewLeftCol, i)});
            out.push_back({lab(L, true, k + 1, l, p), step(StepType::kNewLeftCol, l)});
            if (a.e) {
                if (p >= 1)
                    out.push_back({lab(L, true, k, l + 1, p - 1), step(StepType::kExtendColDown)});
                else
                    out.push_back({lab(B, false, k, 1, l + 1), step(StepType::kExtendColDown)});
            }
            break;
        case B:
            // The leftmost column of a B-stage polygon spans the full box
            // height p, so fresh columns may take any length up to p.
            for (int i = 1; i < k; ++i)
                out.push_back({lab(T, false, i, k - i, p + 1), step(StepType::kNewTopRow, i)});
            out.push_back({lab(T, true, k, 0, p + 1), step(StepType::kNewTopRow, k)});
            for (int i = 1; i < p; ++i)
                out.push_back({lab(L, false, k + 1, i, p - i), step(StepType::kNewLeftCol, i)});
            out.push_back({lab(L, true, k + 1, p, 0), step(StepType::kNewLeftCol, p)});
            for (int i = 1; i < l; ++i)
                out.push_back({lab(B, false, k, i, p + 1), step(StepType::kNewBottomRow, i)});
            out.push_back({lab(B, k - 1 > l, k, l, p + 1), step(StepType::kNewBottomRow, l)});
            if (a.e)
                out.push_back({lab(B, k - 1 > l + 1, k, l + 1, p), step(StepType::kExtendBottomRight)});
            break;
        default:
            throw std::logic_error("children: bad label class");
    }
}

}  // namespace

const char* class_name(SampleClass c) {
    switch (c) {
        case SampleClass::kTwo: return "two";
        case SampleClass::kThree: return "three";
        case SampleClass::kAll: return "all";
    }
    throw std::logic_error("class_name: bad class");
}

Label root_label(SampleClass c) {
    switch (c) {
        case SampleClass::kTwo: return Label{T, true, 1, 0, 0};
        case SampleClass::kThree: return Label{L, false, 1, 1, 0};
        case SampleClass::kAll: return Label{L, false, 1, 1, 0};
    }
    throw std::logic_error("root_label: bad class");
}

void children(SampleClass c, const Label& a, std::vector<Child>& out) {
    out.clear();
    switch (c) {
        case SampleClass::kTwo: two_sided(a, out); break;
        case SampleClass::kThree: three_sided(a, out); break;
        case SampleClass::kAll: unrestricted(a, out); break;
    }
}

}  // namespace pp::sampler
