#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlsim/retrieval.hpp"
#include "dlsim/similarity.hpp"

namespace dlsim {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::string kb_path;
    Backend backend = Backend::Canonical;
    std::optional<std::size_t> msc_depth;  // nullopt = abox depth
    OutputFormat output = OutputFormat::Text;
    bool cache = false;
};

/// Process exit codes shared by every subcommand.
namespace exit_code {
inline constexpr int ok = 0;        // success, or the answer is yes
inline constexpr int negative = 1;  // the answer is no, or the KB is inconsistent
inline constexpr int error = 2;     // usage, parse, or internal error
}  // namespace exit_code

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void to_json(nlohmann::json& j, const SimilarityReport& r);
void from_json(const nlohmann::json& j, SimilarityReport& r);

}  // namespace dlsim
