#include "pp/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pp::oracle {

namespace {

constexpr int kDx[4] = {1, -1, 0, 0};
constexpr int kDy[4] = {0, 0, 1, -1};

struct Box {
    int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    void expand(int x, int y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    int span() const { return (xmax - xmin) + (ymax - ymin); }
};

// Side membership uses plain coordinate equality, so vertices of a
// degenerate (flat) box lie on the coinciding sides simultaneously.
struct SideFlags {
    bool one, two, three;
};

// Update per-class predicates for a step in direction d ending at (x,y),
// where `post` is the box after the step and `inflated` says whether the
// step enlarged the box.
void update_sides(SideFlags& f, int d, int x, int y, const Box& post, bool inflated) {
    bool top = (y == post.ymax);
    bool right = (x == post.xmax);
    bool left = (x == post.xmin);
    bool bottom = (y == post.ymin);
    f.one = f.one && top;
    f.two = f.two && (top || right);
    bool three = left || top || right;
    if (kDy[d] == 0 && bottom && !inflated) three = false;  // width-one zig-zags
    f.three = f.three && three;
}

struct Dfs {
    int m, L, cap;
    PPClass cls;
    bool collect;
    int offset, stride;
    std::vector<char> visited;
    std::vector<Vertex> path;
    EnumerateResult out;

    char& at(int x, int y) { return visited[(y + offset) * stride + (x + offset)]; }

    bool prudent_step(int x, int y, int d, const Box& box) {
        int cx = x + kDx[d], cy = y + kDy[d];
        while (cx >= box.xmin && cx <= box.xmax && cy >= box.ymin && cy <= box.ymax) {
            if (at(cx, cy)) return false;
            cx += kDx[d];
            cy += kDy[d];
        }
        return true;
    }

    void accept(SideFlags f) {
        auto [x, y] = path.back();
        unsigned mask = kAll;
        if (f.one) mask |= kOne;
        if (f.two) mask |= kTwo;
        if (f.three) mask |= kThree;
        if (x == 1 && y == 0 && path[path.size() - 2] == Vertex{1, 1}) mask |= kClassF;
        unsigned need = 0;
        switch (cls) {
            case PPClass::one: need = kOne; break;
            case PPClass::two: need = kTwo; break;
            case PPClass::three: need = kThree; break;
            case PPClass::all: need = kAll; break;
            case PPClass::classF: need = kClassF; break;
        }
        if ((mask & need) != need) return;
        ++out.count;
        if (collect) {
            PolygonRecord rec;
            rec.cells = cells_from_walk(path);
            rec.endpoint = path.back();
            rec.clockwise = signed_area(path) < 0;
            rec.classes = mask;
            rec.half_perimeter = m;
            out.records.push_back(std::move(rec));
        }
    }

    void step(int x, int y, const Box& box, SideFlags f) {
        int done = int(path.size()) - 1;
        if (done == L) {
            if (std::abs(x) + std::abs(y) == 1) accept(f);
            return;
        }
        if (std::abs(x) + std::abs(y) - 1 > L - done) return;
        for (int d = 0; d < 4; ++d) {
            if (!prudent_step(x, y, d, box)) continue;
            int nx = x + kDx[d], ny = y + kDy[d];
            Box nbox = box;
            nbox.expand(nx, ny);
            if (nbox.span() > m) continue;
            bool inflated = nbox.xmin != box.xmin || nbox.xmax != box.xmax ||
                            nbox.ymin != box.ymin || nbox.ymax != box.ymax;
            SideFlags nf = f;
            update_sides(nf, d, nx, ny, nbox, inflated);
            if (cls == PPClass::one && !nf.one) continue;
            if (cls == PPClass::two && !nf.two) continue;
            if (cls == PPClass::three && !nf.three) continue;
            at(nx, ny) = 1;
            path.emplace_back(nx, ny);
            step(nx, ny, nbox, nf);
            path.pop_back();
            at(nx, ny) = 0;
        }
    }
};

std::vector<Vertex> closed_cycle(const std::vector<Vertex>& walk) {
    std::vector<Vertex> cycle = walk;
    cycle.push_back(walk.front());
    return cycle;
}

}  // namespace

EnumerateResult enumerate(int m, PPClass cls, bool collect, int cap) {
    if (cap == 0) cap = (cls == PPClass::all || cls == PPClass::classF) ? 10 : 14;
    if (m < 2 || m > cap) throw std::invalid_argument("enumerate: m out of range");
    Dfs dfs;
    dfs.m = m;
    dfs.L = 2 * m - 1;
    dfs.cap = cap;
    dfs.cls = cls;
    dfs.collect = collect;
    dfs.offset = m + 1;
    dfs.stride = 2 * m + 3;
    dfs.visited.assign(dfs.stride * dfs.stride, 0);
    dfs.path.emplace_back(0, 0);
    dfs.at(0, 0) = 1;
    dfs.step(0, 0, Box{}, SideFlags{true, true, true});
    return std::move(dfs.out);
}

bool is_prudent(const std::vector<Vertex>& walk) {
    if (walk.size() < 4 || walk.front() != Vertex{0, 0}) return false;
    std::set<Vertex> seen{walk.front()};
    Box box;
    for (size_t i = 1; i < walk.size(); ++i) {
        int dx = walk[i].first - walk[i - 1].first;
        int dy = walk[i].second - walk[i - 1].second;
        if (std::abs(dx) + std::abs(dy) != 1) return false;
        // scan the ray ahead within the current box
        int cx = walk[i].first, cy = walk[i].second;
        while (cx >= box.xmin && cx <= box.xmax && cy >= box.ymin && cy <= box.ymax) {
            if (seen.count({cx, cy})) return false;
            cx += dx;
            cy += dy;
        }
        seen.insert(walk[i]);
        box.expand(walk[i].first, walk[i].second);
    }
    return true;
}

unsigned classify(const std::vector<Vertex>& walk) {
    if (!is_prudent(walk)) throw std::domain_error("classify: walk is not prudent");
    auto [ex, ey] = walk.back();
    if (std::abs(ex) + std::abs(ey) != 1)
        throw std::domain_error("classify: endpoint not adjacent to origin");
    Box box;
    SideFlags f{true, true, true};
    for (size_t i = 1; i < walk.size(); ++i) {
        int dx = walk[i].first - walk[i - 1].first;
        int dy = walk[i].second - walk[i - 1].second;
        int d = dx == 1 ? 0 : dx == -1 ? 1 : dy == 1 ? 2 : 3;
        Box nbox = box;
        nbox.expand(walk[i].first, walk[i].second);
        bool inflated = nbox.xmin != box.xmin || nbox.xmax != box.xmax ||
                        nbox.ymin != box.ymin || nbox.ymax != box.ymax;
        update_sides(f, d, walk[i].first, walk[i].second, nbox, inflated);
        box = nbox;
    }
    unsigned mask = kAll;
    if (f.one) mask |= kOne;
    if (f.two) mask |= kTwo;
    if (f.three) mask |= kThree;
    if (ex == 1 && ey == 0 && walk[walk.size() - 2] == Vertex{1, 1}) mask |= kClassF;
    return mask;
}

long long signed_area(const std::vector<Vertex>& walk) {
    auto cycle = closed_cycle(walk);
    long long a = 0;
    for (size_t i = 0; i + 1 < cycle.size(); ++i)
        a += (long long)cycle[i].first * cycle[i + 1].second -
             (long long)cycle[i + 1].first * cycle[i].second;
    return a / 2;
}

Cells cells_from_walk(const std::vector<Vertex>& walk) {
    auto cycle = closed_cycle(walk);
    // vertical edge at x covering [y, y+1] -> toggle point (x, y)
    std::map<int, std::vector<int>> rows;
    for (size_t i = 0; i + 1 < cycle.size(); ++i) {
        if (cycle[i].first == cycle[i + 1].first) {
            int y = std::min(cycle[i].second, cycle[i + 1].second);
            rows[y].push_back(cycle[i].first);
        }
    }
    Cells cells;
    for (auto& [y, xs] : rows) {
        std::sort(xs.begin(), xs.end());
        if (xs.size() % 2 != 0) throw std::domain_error("cells_from_walk: open boundary");
        for (size_t i = 0; i < xs.size(); i += 2)
            for (int x = xs[i]; x < xs[i + 1]; ++x) cells.emplace_back(x, y);
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<Vertex> extract_boundary_walk(const Cells& cells, Vertex endpoint,
                                          bool clockwise) {
    if (cells.empty()) throw std::domain_error("extract_boundary_walk: no cells");
    std::set<std::pair<int, int>> cellset(cells.begin(), cells.end());
    // boundary edges = cell edges with exactly one incident cell in the set
    std::map<Vertex, std::vector<Vertex>> adj;
    auto add_edge = [&](Vertex a, Vertex b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (auto [x, y] : cells) {
        if (!cellset.count({x, y - 1})) add_edge({x, y}, {x + 1, y});
        if (!cellset.count({x, y + 1})) add_edge({x, y + 1}, {x + 1, y + 1});
        if (!cellset.count({x - 1, y})) add_edge({x, y}, {x, y + 1});
        if (!cellset.count({x + 1, y})) add_edge({x + 1, y}, {x + 1, y + 1});
    }
    size_t nedges = 0;
    for (auto& [v, nb] : adj) {
        if (nb.size() != 2)
            throw std::domain_error("extract_boundary_walk: boundary is not a simple cycle");
        nedges += nb.size();
    }
    nedges /= 2;
    auto it = adj.find({0, 0});
    if (it == adj.end())
        throw std::domain_error("extract_boundary_walk: origin not on boundary");
    auto& nb0 = it->second;
    if (nb0[0] != endpoint && nb0[1] != endpoint)
        throw std::domain_error("extract_boundary_walk: closing edge not on boundary");
    std::vector<Vertex> walk{{0, 0}};
    Vertex cur = (nb0[0] == endpoint) ? nb0[1] : nb0[0];
    Vertex prev{0, 0};
    while (true) {
        walk.push_back(cur);
        if (cur == endpoint) break;
        auto& nb = adj[cur];
        Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        if (walk.size() > 2 * nedges)
            throw std::domain_error("extract_boundary_walk: endpoint unreachable");
    }
    if (walk.size() != nedges)  // cycle must cover every boundary edge
        throw std::domain_error("extract_boundary_walk: cells not simply connected");
    if ((signed_area(walk) < 0) != clockwise)
        throw std::domain_error("extract_boundary_walk: orientation mismatch");
    return walk;
}

long long count_shapes(const std::vector<PolygonRecord>& records) {
    std::set<Cells> shapes;
    for (const auto& rec : records) {
        int mx = rec.cells.front().first, my = rec.cells.front().second;
        for (auto [x, y] : rec.cells) {
            mx = std::min(mx, x);
            my = std::min(my, y);
        }
        Cells norm;
        norm.reserve(rec.cells.size());
        for (auto [x, y] : rec.cells) norm.emplace_back(x - mx, y - my);
        std::sort(norm.begin(), norm.end());
        shapes.insert(std::move(norm));
    }
    return (long long)shapes.size();
}

}  // namespace pp::oracle
