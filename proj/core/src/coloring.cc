// Copyright 2026 The adaptstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adaptstab/coloring.h"

#include <algorithm>
#include <string>

#include "adaptstab/errors.h"

namespace adaptstab {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// at[v][c] is the neighbour reached from v along the edge colored c.
class ColorTable {
   public:
    ColorTable(std::size_t vertices, std::size_t colors) : at_(vertices, std::vector<std::size_t>(colors, kNone)) {}

    std::size_t neighbour(std::size_t v, std::size_t c) const { return at_[v][c]; }
    bool is_free(std::size_t v, std::size_t c) const { return at_[v][c] == kNone; }
    std::size_t first_free(std::size_t v) const {
        for (std::size_t c = 0; c < at_[v].size(); ++c) {
            if (at_[v][c] == kNone) return c;
        }
        throw ValidationError("edge coloring ran out of colors");
    }
    std::size_t color_of(std::size_t u, std::size_t v) const {
        for (std::size_t c = 0; c < at_[u].size(); ++c) {
            if (at_[u][c] == v) return c;
        }
        return kNone;
    }
    void set(std::size_t u, std::size_t v, std::size_t c) {
        at_[u][c] = v;
        at_[v][c] = u;
    }
    void clear(std::size_t u, std::size_t v, std::size_t c) {
        at_[u][c] = kNone;
        at_[v][c] = kNone;
    }

    // Swaps colors a and b along the path leaving `start` on color a. The
    // caller guarantees b is free at start, so the path is simple.
    void flip_path(std::size_t start, std::size_t a, std::size_t b) {
        struct Step {
            std::size_t u, v, color;
        };
        std::vector<Step> path;
        std::size_t cur = start;
        std::size_t color = a;
        while (at_[cur][color] != kNone) {
            const std::size_t next = at_[cur][color];
            path.push_back({cur, next, color});
            cur = next;
            color = color == a ? b : a;
        }
        for (const auto& s : path) clear(s.u, s.v, s.color);
        for (const auto& s : path) set(s.u, s.v, s.color == a ? b : a);
    }

   private:
    std::vector<std::vector<std::size_t>> at_;
};

void check_simple(std::size_t vertices, const std::vector<Edge>& edges) {
    std::vector<Edge> seen;
    for (const auto& [u, v] : edges) {
        if (u >= vertices || v >= vertices) throw DimensionError("edge endpoint out of range");
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw ValidationError("repeated edge");
}

}  // namespace

std::size_t max_degree(std::size_t vertices, const std::vector<Edge>& edges) {
    std::vector<std::size_t> deg(vertices, 0);
    for (const auto& [u, v] : edges) {
        ++deg.at(u);
        ++deg.at(v);
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::size_t color_count(const std::vector<std::size_t>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

bool is_proper_edge_coloring(std::size_t vertices, const std::vector<Edge>& edges,
                             const std::vector<std::size_t>& colors) {
    if (colors.size() != edges.size()) return false;
    std::vector<std::vector<std::size_t>> used(vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (auto v : {edges[e].first, edges[e].second}) {
            if (std::find(used[v].begin(), used[v].end(), colors[e]) != used[v].end()) return false;
            used[v].push_back(colors[e]);
        }
    }
    return true;
}

std::vector<std::size_t> edge_color_bipartite(std::size_t left, std::size_t right, const std::vector<Edge>& edges) {
    const std::size_t vertices = left + right;
    std::vector<Edge> merged;
    merged.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u >= left || v >= right) throw DimensionError("bipartite edge endpoint out of range");
        merged.emplace_back(u, left + v);
    }
    check_simple(vertices, merged);
    const std::size_t delta = max_degree(vertices, merged);
    ColorTable table(vertices, delta);
    for (const auto& [u, v] : merged) {
        const std::size_t a = table.first_free(u);
        if (!table.is_free(v, a)) {
            // The a/b path from v never reaches u in a bipartite graph.
            const std::size_t b = table.first_free(v);
            table.flip_path(v, a, b);
        }
        table.set(u, v, a);
    }
    std::vector<std::size_t> colors;
    colors.reserve(merged.size());
    for (const auto& [u, v] : merged) colors.push_back(table.color_of(u, v));
    return colors;
}

std::vector<std::size_t> edge_color_general(std::size_t vertices, const std::vector<Edge>& edges) {
    check_simple(vertices, edges);
    const std::size_t palette = max_degree(vertices, edges) + 1;
    ColorTable table(vertices, palette);
    std::vector<std::vector<std::size_t>> neighbours(vertices);
    for (const auto& [u, v] : edges) {
        neighbours[u].push_back(v);
        neighbours[v].push_back(u);
    }

    for (const auto& [x, f] : edges) {
        // Maximal fan at x starting with the uncolored edge (x, f).
        std::vector<std::size_t> fan = {f};
        while (true) {
            const std::size_t last = fan.back();
            std::size_t found = kNone;
            for (auto z : neighbours[x]) {
                if (std::find(fan.begin(), fan.end(), z) != fan.end()) continue;
                const std::size_t c = table.color_of(x, z);
                if (c != kNone && table.is_free(last, c)) {
                    found = z;
                    break;
                }
            }
            if (found == kNone) break;
            fan.push_back(found);
        }
        const std::size_t c = table.first_free(x);
        const std::size_t d = table.first_free(fan.back());
        if (c != d) table.flip_path(x, d, c);

        // First fan vertex with d free whose prefix is still a fan.
        std::size_t w = kNone;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                const std::size_t ci = table.color_of(x, fan[i]);
                if (ci == kNone || !table.is_free(fan[i - 1], ci)) break;
            }
            if (table.is_free(fan[i], d)) {
                w = i;
                break;
            }
        }
        if (w == kNone) throw ValidationError("edge coloring fan rotation failed");
        std::vector<std::size_t> shifted(w);
        for (std::size_t i = 0; i < w; ++i) shifted[i] = table.color_of(x, fan[i + 1]);
        for (std::size_t i = 1; i <= w; ++i) table.clear(x, fan[i], table.color_of(x, fan[i]));
        for (std::size_t i = 0; i < w; ++i) table.set(x, fan[i], shifted[i]);
        table.set(x, fan[w], d);
    }
    std::vector<std::size_t> colors;
    colors.reserve(edges.size());
    for (const auto& [u, v] : edges) colors.push_back(table.color_of(u, v));
    return colors;
}

}  // namespace adaptstab
