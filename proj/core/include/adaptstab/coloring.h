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

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace adaptstab {

using Edge = std::pair<std::size_t, std::size_t>;

/// Proper edge coloring of a bipartite multigraph-free graph with exactly
/// max-degree colors, by alternating-path recoloring. Left vertices are
/// 0..left-1 and right vertices 0..right-1 in their own index spaces. Edges are
/// processed in input order, so the result is deterministic.
std::vector<std::size_t> edge_color_bipartite(std::size_t left, std::size_t right, const std::vector<Edge>& edges);

/// Proper edge coloring of a simple graph with at most max-degree + 1 colors
/// (Misra-Gries fan rotation).
std::vector<std::size_t> edge_color_general(std::size_t vertices, const std::vector<Edge>& edges);

/// True when no two edges sharing a vertex share a color.
bool is_proper_edge_coloring(std::size_t vertices, const std::vector<Edge>& edges,
                             const std::vector<std::size_t>& colors);

std::size_t max_degree(std::size_t vertices, const std::vector<Edge>& edges);

std::size_t color_count(const std::vector<std::size_t>& colors);

}  // namespace adaptstab
