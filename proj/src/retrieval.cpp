#include "dlsim/retrieval.hpp"

#include "dlsim/error.hpp"

namespace dlsim {

const char* to_string(Backend b) noexcept {
    return b == Backend::Entail ? "entail" : "canonical";
}

std::optional<Backend> parse_backend(std::string_view text) {
    if (text == "entail") return Backend::Entail;
    if (text == "canonical") return Backend::Canonical;
    return std::nullopt;
}

Retriever::Retriever(const KnowledgeBase& kb, Backend backend, bool cache)
    : kb_(kb), backend_(backend), cache_enabled_(cache) {
    kb_.tbox.check_acyclic();
}

const CanonicalModel& Retriever::model() {
    if (!model_) model_ = build_canonical(kb_);
    return *model_;
}

Reasoner& Retriever::reasoner() {
    if (!reasoner_) reasoner_.emplace(kb_);
    return *reasoner_;
}

IndividualSet Retriever::compute(const Concept& c) {
    if (backend_ == Backend::Canonical) return eval_concept(model(), kb_.tbox, c);
    return reasoner().retrieve(c);
}

IndividualSet Retriever::extension(const Concept& c) {
    if (cache_enabled_) {
        if (auto it = cache_.find(c); it != cache_.end()) return it->second;
    }
    ++counters_.extension_computations;
    IndividualSet out = compute(c);
    if (cache_enabled_) cache_.emplace(c, out);
    return out;
}

const std::set<std::string>& Retriever::realize(const std::string& individual) {
    if (!kb_.abox.has_individual(individual)) throw UnknownIndividual(individual);
    if (!realization_) {
        std::map<std::string, std::set<std::string>> table;
        for (const auto& ind : kb_.individuals()) table[ind];
        for (const auto& name : kb_.signature().concepts)
            for (const auto& ind : compute(Concept::atom(name))) table[ind].insert(name);
        realization_ = std::move(table);
    }
    return realization_->at(individual);
}

}  // namespace dlsim
