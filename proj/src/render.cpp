#include "pp/render.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "pp/sampler.hpp"

namespace pp::render {

namespace {

struct Box {
    int xmin, xmax, ymin, ymax;
};

Box bounding_box(const oracle::Cells& cells) {
    if (cells.empty()) throw std::invalid_argument("render: empty cell set");
    Box b{cells[0].first, cells[0].first, cells[0].second, cells[0].second};
    for (const auto& [x, y] : cells) {
        b.xmin = std::min(b.xmin, x);
        b.xmax = std::max(b.xmax, x);
        b.ymin = std::min(b.ymin, y);
        b.ymax = std::max(b.ymax, y);
    }
    return b;
}

}  // namespace

std::string to_ascii(const oracle::Cells& cells) {
    Box b = bounding_box(cells);
    size_t w = size_t(b.xmax - b.xmin + 1);
    std::vector<std::string> rows(size_t(b.ymax - b.ymin + 1), std::string(w, '.'));
    for (const auto& [x, y] : cells)
        rows[size_t(b.ymax - y)][size_t(x - b.xmin)] = '#';
    std::string out;
    for (const std::string& r : rows) {
        out += r;
        out += '\n';
    }
    return out;
}

std::string to_svg(const oracle::Cells& cells) {
    Box b = bounding_box(cells);
    const int u = 10;  // px per cell
    int w = (b.xmax - b.xmin + 3) * u;
    int h = (b.ymax - b.ymin + 3) * u;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"" << (b.xmin - 1) * u << " " << -u
        << " " << w << " " << h << "\">\n";
    svg << "<g fill=\"#4878a8\" stroke=\"#1c3450\" stroke-width=\"1\">\n";
    oracle::Cells sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [x, y] : sorted)
        svg << "<rect x=\"" << x * u << "\" y=\"" << (b.ymax - y) * u
            << "\" width=\"" << u << "\" height=\"" << u << "\"/>\n";
    svg << "</g>\n</svg>\n";
    return svg.str();
}

std::string to_json(const char* class_name, const oracle::Cells& cells,
                    int half_perimeter, uint64_t seed, uint64_t index) {
    oracle::Cells sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    nlohmann::json j;
    j["class"] = class_name;
    j["half_perimeter"] = half_perimeter;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [x, y] : sorted) arr.push_back({x, y});
    j["cells"] = std::move(arr);
    j["endpoint"] = {1, 0};
    j["seed"] = seed;
    j["index"] = index;
    j["generator"] = sampler::kGeneratorId;
    return j.dump();
}

}  // namespace pp::render
