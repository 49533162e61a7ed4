#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cdta::prompts {

/// A rendered prompt plus the slot values it was rendered from. The slot map
/// travels on ChatRequest::fields so the scripted provider can respond from
/// structure instead of re-parsing prose; live providers only see the text.
struct Rendered {
    std::string text;
    std::map<std::string, std::string> fields;
};

// Values inside `fields` lists are joined with this separator.
inline constexpr char kFieldListSep = '\x1e';

Rendered topic_extraction(const std::string& segment_text);

Rendered relevance_check(const std::string& topic_name, const std::string& topic_description,
                         const std::string& segment_text);

Rendered knowledge_synthesis(const std::string& topic_name, const std::string& topic_description,
                             const std::vector<std::string>& fragments);

/// Merge duplicate topic entries into one canonical name + description.
Rendered canonical_naming(const std::vector<std::pair<std::string, std::string>>& members);

/// Short situating context prepended to a chunk before embedding.
Rendered chunk_context(const std::string& title, const std::string& lead,
                       const std::string& chunk_text);

/// Grounded question answering over retrieved chunks, in rank order.
Rendered grounded_answer(const std::string& question, const std::vector<std::string>& contexts);

Rendered claim_decomposition(const std::string& answer);
Rendered claim_support(const std::string& claim, const std::string& context);
Rendered chunk_relevance(const std::string& question, const std::string& chunk_text);
Rendered fact_attribution(const std::string& fact, const std::string& context);

/// Appended on the single re-prompt after a malformed structured response.
const std::string& json_retry_suffix();
const std::string& binary_retry_suffix();

}  // namespace cdta::prompts
