#include "dlsim/cluster.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

namespace dlsim {

const char* to_string(Linkage l) noexcept {
    switch (l) {
        case Linkage::Single: return "single";
        case Linkage::Complete: return "complete";
        case Linkage::Average: return "average";
    }
    return "complete";
}

std::optional<Linkage> parse_linkage(std::string_view text) {
    if (text == "single") return Linkage::Single;
    if (text == "complete") return Linkage::Complete;
    if (text == "average") return Linkage::Average;
    return std::nullopt;
}

namespace {

struct Cluster {
    std::size_t id;
    std::vector<std::size_t> members;
    std::string label;  // smallest member label
};

double linkage_score(const Cluster& a, const Cluster& b, const std::vector<std::vector<double>>& sim,
                     Linkage linkage) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (auto i : a.members) {
        for (auto j : b.members) {
            double s = sim[i][j];
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            sum += s;
        }
    }
    switch (linkage) {
        case Linkage::Single: return hi;
        case Linkage::Complete: return lo;
        case Linkage::Average: return sum / static_cast<double>(a.members.size() * b.members.size());
    }
    return lo;
}

}  // namespace

Dendrogram agglomerate(const std::vector<std::string>& labels,
                       const std::vector<std::vector<double>>& similarity, Linkage linkage) {
    const std::size_t n = labels.size();
    if (similarity.size() != n)
        throw std::invalid_argument("similarity matrix does not match the label count");
    for (const auto& row : similarity)
        if (row.size() != n) throw std::invalid_argument("similarity matrix is not square");

    Dendrogram out;
    out.leaves = labels;
    std::vector<Cluster> active;
    for (std::size_t i = 0; i < n; ++i) active.push_back({i, {i}, labels[i]});

    std::size_t next_id = n;
    while (active.size() > 1) {
        std::size_t best_a = 0, best_b = 1;
        double best = -std::numeric_limits<double>::infinity();
        std::pair<std::string, std::string> best_key;
        for (std::size_t a = 0; a < active.size(); ++a) {
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                double s = linkage_score(active[a], active[b], similarity, linkage);
                auto key = std::minmax(active[a].label, active[b].label);
                std::pair<std::string, std::string> k{key.first, key.second};
                if (s > best || (s == best && k < best_key)) {
                    best = s;
                    best_a = a;
                    best_b = b;
                    best_key = std::move(k);
                }
            }
        }
        Cluster& a = active[best_a];
        Cluster& b = active[best_b];
        if (b.label < a.label) std::swap(best_a, best_b);
        Cluster& left = active[best_a];
        Cluster& right = active[best_b];
        out.merges.push_back({left.id, right.id, best});

        Cluster merged{next_id++, left.members, std::min(left.label, right.label)};
        merged.members.insert(merged.members.end(), right.members.begin(), right.members.end());
        std::size_t hi = std::max(best_a, best_b), lo = std::min(best_a, best_b);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(hi));
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(lo));
        active.push_back(std::move(merged));
    }
    return out;
}

std::string render(const Dendrogram& d) {
    const std::size_t n = d.leaves.size();
    std::string out;
    if (n == 0) return out;
    std::function<void(std::size_t, int)> emit = [&](std::size_t id, int indent) {
        out.append(static_cast<std::size_t>(indent) * 2, ' ');
        if (id < n) {
            out += d.leaves[id];
            out += '\n';
            return;
        }
        const Merge& m = d.merges[id - n];
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", m.similarity);
        out += "+ ";
        out += buf;
        out += '\n';
        emit(m.left, indent + 1);
        emit(m.right, indent + 1);
    };
    emit(d.merges.empty() ? 0 : n + d.merges.size() - 1, 0);
    return out;
}

}  // namespace dlsim
