#include <stdexcept>

#include "pp/sampler.hpp"

namespace pp::sampler {

GrowingPolygon::GrowingPolygon() { cells_.push_back({0, 0}); }

void GrowingPolygon::apply(const Step& st) {
    switch (st.type) {
        case StepType::kNewTopRow:
            if (st.len < 1 || st.len > top_len_)
                throw std::invalid_argument("apply: bad top row length");
            ++ymax_;
            for (int x = -(st.len - 1); x <= 0; ++x) cells_.push_back({x, ymax_});
            top_len_ = st.len;
            break;
        case StepType::kExtendTopLeft:
            cells_.push_back({-top_len_, ymax_});
            if (-top_len_ < xmin_) {
                xmin_ = -top_len_;       // inflates the box: a fresh
                col_bottom_ = ymax_;     // one-cell leftmost column
            }
            ++top_len_;
            break;
        case StepType::kNewLeftCol:
            if (st.len < 1 || st.len > ymax_ - ymin_ + 1)
                throw std::invalid_argument("apply: bad column length");
            --xmin_;
            col_bottom_ = ymax_ - st.len + 1;
            for (int y = col_bottom_; y <= ymax_; ++y) cells_.push_back({xmin_, y});
            ++top_len_;  // flush-top columns extend the top row
            break;
        case StepType::kExtendColDown:
            --col_bottom_;
            cells_.push_back({xmin_, col_bottom_});
            if (col_bottom_ < ymin_) {
                ymin_ = col_bottom_;  // inflates the box: a fresh bottom row
                bottom_len_ = 1;
            }
            break;
        case StepType::kNewBottomRow:
            if (st.len < 1 || st.len > bottom_len_)
                throw std::invalid_argument("apply: bad bottom row length");
            --ymin_;
            for (int x = xmin_; x < xmin_ + st.len; ++x) cells_.push_back({x, ymin_});
            bottom_len_ = st.len;
            col_bottom_ = ymin_;  // bottom rows keep the left column full height
            break;
        case StepType::kExtendBottomRight:
            cells_.push_back({xmin_ + bottom_len_, ymin_});
            ++bottom_len_;
            break;
        default:
            throw std::invalid_argument("apply: bad step type");
    }
}

}  // namespace pp::sampler
