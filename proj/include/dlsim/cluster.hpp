#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlsim {

enum class Linkage { Single, Complete, Average };

const char* to_string(Linkage l) noexcept;
std::optional<Linkage> parse_linkage(std::string_view text);

struct Merge {
    std::size_t left;   // cluster ids: leaves are 0..n-1, merge k creates n+k
    std::size_t right;
    double similarity;
};

struct Dendrogram {
    std::vector<std::string> leaves;
    std::vector<Merge> merges;
};

/// Agglomerative clustering on a similarity matrix: repeatedly merges the two
/// clusters with the highest linkage similarity. Ties go to the pair whose
/// labels (smallest leaf label of each cluster) compare lowest.
Dendrogram agglomerate(const std::vector<std::string>& labels,
                       const std::vector<std::vector<double>>& similarity, Linkage linkage);

/// Indented tree, one line per cluster.
std::string render(const Dendrogram& d);

}  // namespace dlsim
