#include "dlsim/msc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "dlsim/error.hpp"

namespace dlsim {

namespace {

using Adjacency = std::map<std::string, std::vector<std::pair<std::string, std::string>>>;

class RollUp {
public:
    RollUp(Retriever& r) : retriever_(r) {
        for (const auto& a : r.kb().abox.role_assertions()) out_[a.subject].push_back({a.role, a.object});
    }

    Concept run(const std::string& x, std::size_t depth, std::set<std::string>& path) {
        std::vector<Concept> parts;
        for (const auto& name : retriever_.realize(x)) parts.push_back(Concept::atom(name));
        if (depth > 0) {
            if (auto it = out_.find(x); it != out_.end()) {
                for (const auto& [role, y] : it->second) {
                    if (path.contains(y)) {
                        parts.push_back(Concept::exists(role, Concept::top()));
                        continue;
                    }
                    path.insert(y);
                    parts.push_back(Concept::exists(role, run(y, depth - 1, path)));
                    path.erase(y);
                }
            }
        }
        return conjoin(std::move(parts));
    }

private:
    Retriever& retriever_;
    Adjacency out_;
};

}  // namespace

std::size_t abox_depth(const KnowledgeBase& kb) {
    std::map<std::string, std::set<std::string>> succ;
    for (const auto& a : kb.abox.role_assertions()) succ[a.subject].insert(a.object);

    std::set<std::string> on_path;
    auto longest = [&](auto&& self, const std::string& x) -> std::size_t {
        std::size_t best = 0;
        auto it = succ.find(x);
        if (it == succ.end()) return 0;
        for (const auto& y : it->second) {
            if (on_path.contains(y)) continue;
            on_path.insert(y);
            best = std::max(best, 1 + self(self, y));
            on_path.erase(y);
        }
        return best;
    };

    std::size_t best = 0;
    for (const auto& x : kb.individuals()) {
        on_path.insert(x);
        best = std::max(best, longest(longest, x));
        on_path.erase(x);
    }
    return best;
}

MscResult msc_approx(Retriever& r, const std::string& individual, std::size_t depth) {
    if (!r.kb().abox.has_individual(individual)) throw UnknownIndividual(individual);
    ++r.counters().msc_computations;
    std::set<std::string> path{individual};
    Concept rolled = RollUp(r).run(individual, depth, path);
    return {individual, depth, normalize(rolled), r.backend()};
}

MscResult msc_approx(const KnowledgeBase& kb, const std::string& individual, std::size_t depth,
                     Backend backend) {
    Retriever r(kb, backend);
    return msc_approx(r, individual, depth);
}

}  // namespace dlsim
