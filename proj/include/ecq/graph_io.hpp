#pragma once

#include <string>
#include <vector>

#include "ecq/graph.hpp"

namespace ecq {

/// {"format_version":1, "n":..., "edges":[[u,v],...], "labels":{"0":...}}
std::string graph_to_json(const Graph& g);

/// DOT rendering with one fill color per node category (category values index
/// into the palette). Node order, and therefore the output, is deterministic.
std::string graph_to_dot(const Graph& g, const std::vector<int>& category,
                         const std::vector<std::string>& palette);

/// Two-category coloring: highlighted nodes vs the rest.
std::vector<int> categories_from_highlight(int n, const std::vector<int>& highlight);

/// Equal-width score buckets (low..high), e.g. 3 for the purple/green/yellow
/// figure style.
std::vector<int> categories_from_scores(const std::vector<double>& scores, int buckets = 3);

/// Default palette, least to most central: purple, green, yellow.
const std::vector<std::string>& default_palette();

}  // namespace ecq
