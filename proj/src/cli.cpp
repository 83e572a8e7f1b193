#include "dlsim/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dlsim/cluster.hpp"
#include "dlsim/generator.hpp"
#include "dlsim/msc.hpp"
#include "dlsim/parser.hpp"
#include "dlsim/tableau.hpp"

namespace dlsim {

using nlohmann::json;

void to_json(json& j, const SimilarityReport& r) {
    j = json{{"value", r.value},
             {"ext_c", r.ext_c},
             {"ext_d", r.ext_d},
             {"ext_i", r.ext_i},
             {"backend", to_string(r.backend)},
             {"extension_computations", r.extension_computations},
             {"msc_computations", r.msc_computations},
             {"msc_depth", r.msc_depth ? json(*r.msc_depth) : json(nullptr)}};
}

void from_json(const json& j, SimilarityReport& r) {
    j.at("ext_c").get_to(r.ext_c);
    j.at("ext_d").get_to(r.ext_d);
    j.at("ext_i").get_to(r.ext_i);
    r.exact = sim_formula(r.ext_c, r.ext_d, r.ext_i);
    j.at("value").get_to(r.value);
    auto backend = parse_backend(j.at("backend").get<std::string>());
    if (!backend) throw std::invalid_argument("unknown backend in report");
    r.backend = *backend;
    j.at("extension_computations").get_to(r.extension_computations);
    j.at("msc_computations").get_to(r.msc_computations);
    const auto& depth = j.at("msc_depth");
    r.msc_depth = depth.is_null() ? std::nullopt : std::optional<std::size_t>(depth.get<std::size_t>());
}

namespace {

/// Bad command-line input that parsed syntactically.
class UsageError : public DlError {
public:
    using DlError::DlError;
};

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string full_precision(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string rational_text(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

Concept concept_arg(const std::string& text) {
    try {
        return parse_concept(text);
    } catch (const ParseError& e) {
        throw UsageError("in concept '" + text + "': " + e.what());
    }
}

SimItem resolve_item(const KnowledgeBase& kb, const Signature& sig, const std::string& text) {
    if (text.rfind("ind:", 0) == 0) {
        std::string name = text.substr(4);
        if (!kb.abox.has_individual(name)) throw UnknownIndividual(name);
        return {text, IndividualRef{name}};
    }
    if (text.rfind("concept:", 0) == 0) return {text, concept_arg(text.substr(8))};
    if (kb.abox.has_individual(text)) {
        if (sig.concepts.contains(text))
            throw UsageError("'" + text + "' names both an individual and a concept; write ind:" + text +
                             " or concept:" + text);
        return {text, IndividualRef{text}};
    }
    return {text, concept_arg(text)};
}

struct Options {
    std::string kb_path;
    std::string backend = "canonical";
    std::string depth = "auto";
    std::string format = "text";
    bool cache = false;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("kb", o.kb_path, "knowledge base (.dlkb)")->required();
    cmd->add_option("--backend", o.backend, "entail|canonical")
        ->check(CLI::IsMember({"entail", "canonical"}))
        ->capture_default_str();
    cmd->add_option("--depth", o.depth, "MSC* depth: N or auto")->capture_default_str();
    cmd->add_option("--format", o.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--cache", o.cache, "reuse extensions computed earlier in the run");
}

RunConfig make_config(const Options& o) {
    RunConfig cfg;
    cfg.kb_path = o.kb_path;
    cfg.backend = *parse_backend(o.backend);
    cfg.output = o.format == "json" ? OutputFormat::Json : o.format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
    cfg.cache = o.cache;
    if (o.depth != "auto") {
        std::size_t used = 0;
        long long v = -1;
        try {
            v = std::stoll(o.depth, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != o.depth.size() || v < 0) throw UsageError("--depth expects a non-negative integer or 'auto'");
        cfg.msc_depth = static_cast<std::size_t>(v);
    }
    return cfg;
}

void no_csv(const RunConfig& cfg, const char* cmd) {
    if (cfg.output == OutputFormat::Csv)
        throw UsageError(std::string("csv output is not available for '") + cmd + "'");
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    no_csv(cfg, "check");
    KnowledgeBase kb = load_kb(cfg.kb_path);
    bool consistent = Reasoner(kb).abox_consistent();
    const auto& abox = kb.abox;
    if (cfg.output == OutputFormat::Json) {
        out << json{{"consistent", consistent},
                    {"acyclic", true},
                    {"definitions", kb.tbox.size()},
                    {"concept_assertions", abox.concept_assertions().size()},
                    {"role_assertions", abox.role_assertions().size()},
                    {"assertions", abox.size()},
                    {"individuals", abox.individuals().size()}}
                   .dump()
            << "\n";
    } else {
        out << (consistent ? "consistent" : "inconsistent") << ", " << kb.tbox.size() << " definitions, "
            << abox.size() << " assertions, " << abox.individuals().size() << " individuals\n";
    }
    return consistent ? exit_code::ok : exit_code::negative;
}

int cmd_subsumes(const RunConfig& cfg, const std::string& sub, const std::string& sup, std::ostream& out) {
    no_csv(cfg, "subsumes");
    KnowledgeBase kb = load_kb(cfg.kb_path);
    Concept c = concept_arg(sub);
    Concept d = concept_arg(sup);
    bool holds = Reasoner(kb).subsumes(d, c);
    if (cfg.output == OutputFormat::Json) {
        out << json{{"sub", to_string(c)}, {"sup", to_string(d)}, {"holds", holds}}.dump() << "\n";
    } else {
        out << to_string(c) << " <= " << to_string(d) << ": " << (holds ? "holds" : "does not hold") << "\n";
    }
    return holds ? exit_code::ok : exit_code::negative;
}

int cmd_retrieve(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    no_csv(cfg, "retrieve");
    KnowledgeBase kb = load_kb(cfg.kb_path);
    Concept c = concept_arg(text);
    Retriever r(kb, cfg.backend, cfg.cache);
    IndividualSet members = r.extension(c);
    if (cfg.output == OutputFormat::Json) {
        out << json{{"concept", to_string(c)}, {"backend", to_string(cfg.backend)}, {"members", members}}.dump()
            << "\n";
    } else {
        for (const auto& m : members) out << m << "\n";
    }
    return exit_code::ok;
}

int cmd_msc(const RunConfig& cfg, const std::string& individual, std::ostream& out) {
    no_csv(cfg, "msc");
    KnowledgeBase kb = load_kb(cfg.kb_path);
    Retriever r(kb, cfg.backend, cfg.cache);
    std::size_t depth = cfg.msc_depth ? *cfg.msc_depth : abox_depth(kb);
    MscResult msc = msc_approx(r, individual, depth);
    IndividualSet members = r.extension(msc.description);
    std::string text = to_string(msc.description);
    if (cfg.output == OutputFormat::Json) {
        out << json{{"individual", individual},
                    {"depth", depth},
                    {"backend", to_string(cfg.backend)},
                    {"concept", text},
                    {"members", members},
                    {"cardinality", members.size()}}
                   .dump()
            << "\n";
    } else {
        out << text << "\n";
        out << "depth: " << depth << "\n";
        out << "extension (" << members.size() << "):";
        for (const auto& m : members) out << " " << m;
        out << "\n";
    }
    return exit_code::ok;
}

int cmd_sim(const RunConfig& cfg, const std::string& x, const std::string& y, std::ostream& out) {
    no_csv(cfg, "sim");
    KnowledgeBase kb = load_kb(cfg.kb_path);
    Signature sig = kb.signature();
    SimItem a = resolve_item(kb, sig, x);
    SimItem b = resolve_item(kb, sig, y);
    Retriever r(kb, cfg.backend, cfg.cache);

    const auto* ia = std::get_if<IndividualRef>(&a.value);
    const auto* ib = std::get_if<IndividualRef>(&b.value);
    SimilarityReport rep;
    if (ia && ib) {
        rep = sim_individuals(r, ia->name, ib->name, cfg.msc_depth);
    } else if (ia) {
        rep = sim_individual_concept(r, ia->name, std::get<Concept>(b.value), cfg.msc_depth);
    } else if (ib) {
        rep = sim_individual_concept(r, ib->name, std::get<Concept>(a.value), cfg.msc_depth);
    } else {
        rep = sim_concepts(r, std::get<Concept>(a.value), std::get<Concept>(b.value));
    }

    if (cfg.output == OutputFormat::Json) {
        out << json(rep).dump() << "\n";
        return exit_code::ok;
    }
    out << "similarity: " << fixed4(rep.value) << " (" << rational_text(rep.exact) << ")\n";
    out << "extensions: " << rep.ext_c << " " << rep.ext_d << " " << rep.ext_i << "\n";
    out << "backend: " << to_string(rep.backend) << "\n";
    out << "extension_computations: " << rep.extension_computations << "\n";
    out << "msc_computations: " << rep.msc_computations << "\n";
    if (rep.msc_depth) out << "msc_depth: " << *rep.msc_depth << "\n";
    return exit_code::ok;
}

SimMatrix matrix_for(const RunConfig& cfg, const KnowledgeBase& kb, const std::vector<std::string>& texts) {
    Signature sig = kb.signature();
    std::vector<SimItem> items;
    for (const auto& t : texts) items.push_back(resolve_item(kb, sig, t));
    Retriever r(kb, cfg.backend, cfg.cache);
    return sim_matrix(r, items, cfg.msc_depth);
}

int cmd_matrix(const RunConfig& cfg, const std::vector<std::string>& texts, std::ostream& out) {
    KnowledgeBase kb = load_kb(cfg.kb_path);
    SimMatrix m = matrix_for(cfg, kb, texts);
    const std::size_t n = m.labels.size();
    switch (cfg.output) {
        case OutputFormat::Csv: {
            for (const auto& l : m.labels) out << "," << csv_field(l);
            out << "\n";
            for (std::size_t i = 0; i < n; ++i) {
                out << csv_field(m.labels[i]);
                for (std::size_t j = 0; j < n; ++j) out << "," << full_precision(m.values[i][j].value());
                out << "\n";
            }
            break;
        }
        case OutputFormat::Json: {
            json values = json::array();
            for (const auto& row : m.values) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.value());
                values.push_back(std::move(r));
            }
            out << json{{"labels", m.labels},
                        {"values", values},
                        {"backend", to_string(cfg.backend)},
                        {"extension_computations", m.extension_computations},
                        {"msc_computations", m.msc_computations}}
                       .dump()
                << "\n";
            break;
        }
        case OutputFormat::Text: {
            std::size_t width = 6;
            for (const auto& l : m.labels) width = std::max(width, l.size());
            auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
            auto emit = [&](std::string line) {
                line.erase(line.find_last_not_of(' ') + 1);
                out << line << "\n";
            };
            std::string header = pad("");
            for (const auto& l : m.labels) header += "  " + pad(l);
            emit(header);
            for (std::size_t i = 0; i < n; ++i) {
                std::string row = pad(m.labels[i]);
                for (std::size_t j = 0; j < n; ++j) row += "  " + pad(fixed4(m.values[i][j].value()));
                emit(row);
            }
            break;
        }
    }
    return exit_code::ok;
}

int cmd_cluster(const RunConfig& cfg, const std::vector<std::string>& texts, Linkage linkage,
                std::ostream& out) {
    no_csv(cfg, "cluster");
    KnowledgeBase kb = load_kb(cfg.kb_path);
    SimMatrix m = matrix_for(cfg, kb, texts);
    std::vector<std::vector<double>> sim;
    for (const auto& row : m.values) {
        sim.emplace_back();
        for (const auto& v : row) sim.back().push_back(v.value());
    }
    Dendrogram d = agglomerate(m.labels, sim, linkage);
    if (cfg.output == OutputFormat::Json) {
        json merges = json::array();
        for (const auto& mg : d.merges)
            merges.push_back({{"left", mg.left}, {"right", mg.right}, {"similarity", mg.similarity}});
        out << json{{"leaves", d.leaves}, {"merges", merges}, {"linkage", to_string(linkage)}}.dump() << "\n";
        return exit_code::ok;
    }
    const std::size_t n = d.leaves.size();
    for (std::size_t k = 0; k < d.merges.size(); ++k) {
        const auto& mg = d.merges[k];
        out << "merge " << (n + k) << ": " << mg.left << " + " << mg.right << " at " << fixed4(mg.similarity)
            << "\n";
    }
    out << render(d);
    return exit_code::ok;
}

struct GenOptions {
    std::uint64_t seed = 0;
    std::size_t individuals = 8;
    std::size_t concepts = 6;
    std::size_t roles = 2;
    std::size_t depth = 3;
    bool canonical_model = false;
};

int cmd_gen(const GenOptions& g, std::ostream& out) {
    Generator gen(g.seed);
    KbShape shape;
    shape.max_individuals = g.individuals;
    shape.max_concepts = g.concepts;
    shape.roles = g.roles;
    shape.max_depth = g.depth;
    shape.canonical_is_model = g.canonical_model;
    out << serialize(gen.kb(shape));
    return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Description logic reasoning and extension-based concept similarity", "dlsim"};
    app.require_subcommand(1);

    Options o;
    std::string sub, sup, concept_text, individual, x, y, linkage = "complete";
    std::vector<std::string> items;
    GenOptions g;

    auto* check = app.add_subcommand("check", "parse a KB and report its size and consistency");
    add_common(check, o);

    auto* subsumes_cmd = app.add_subcommand("subsumes", "decide whether SUB is subsumed by SUP");
    add_common(subsumes_cmd, o);
    subsumes_cmd->add_option("sub", sub)->required();
    subsumes_cmd->add_option("sup", sup)->required();

    auto* retrieve = app.add_subcommand("retrieve", "list the instances of a concept");
    add_common(retrieve, o);
    retrieve->add_option("concept", concept_text)->required();

    auto* msc = app.add_subcommand("msc", "most specific concept approximation of an individual");
    add_common(msc, o);
    msc->add_option("individual", individual)->required();

    auto* sim = app.add_subcommand("sim", "similarity of two concepts and/or individuals");
    add_common(sim, o);
    sim->add_option("x", x)->required();
    sim->add_option("y", y)->required();

    auto* matrix = app.add_subcommand("matrix", "pairwise similarity matrix");
    add_common(matrix, o);
    matrix->add_option("items", items)->required();

    auto* cluster = app.add_subcommand("cluster", "agglomerative clustering over the similarity matrix");
    add_common(cluster, o);
    cluster->add_option("items", items)->required();
    cluster->add_option("--linkage", linkage, "single|complete|average")
        ->check(CLI::IsMember({"single", "complete", "average"}))
        ->capture_default_str();

    auto* gen = app.add_subcommand("gen", "print a random KB");
    gen->add_option("--seed", g.seed, "generator seed")->required();
    gen->add_option("--individuals", g.individuals, "maximum number of individuals")->capture_default_str();
    gen->add_option("--concepts", g.concepts, "maximum number of concept names")->capture_default_str();
    gen->add_option("--roles", g.roles, "number of role names")->capture_default_str();
    gen->add_option("--max-depth", g.depth, "maximum definition depth")->capture_default_str();
    gen->add_flag("--canonical-model", g.canonical_model,
                  "only assert defined names where their definition holds");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::error;
    }

    try {
        if (gen->parsed()) return cmd_gen(g, out);
        RunConfig cfg = make_config(o);
        if (check->parsed()) return cmd_check(cfg, out);
        if (subsumes_cmd->parsed()) return cmd_subsumes(cfg, sub, sup, out);
        if (retrieve->parsed()) return cmd_retrieve(cfg, concept_text, out);
        if (msc->parsed()) return cmd_msc(cfg, individual, out);
        if (sim->parsed()) return cmd_sim(cfg, x, y, out);
        if (matrix->parsed()) return cmd_matrix(cfg, items, out);
        if (cluster->parsed()) return cmd_cluster(cfg, items, *parse_linkage(linkage), out);
    } catch (const ParseError& e) {
        err << "error: " << o.kb_path << ":" << e.line() << ":" << e.column() << ": " << to_string(e.kind())
            << ": " << e.message() << "\n";
        return exit_code::error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::error;
    }
    return exit_code::error;
}

}  // namespace dlsim
