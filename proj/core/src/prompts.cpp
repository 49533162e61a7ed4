#include "cdta/prompts.hpp"

#include <sstream>

namespace cdta::prompts {

namespace {

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out.push_back(kFieldListSep);
        out += items[i];
    }
    return out;
}

}  // namespace

Rendered topic_extraction(const std::string& segment_text) {
    std::ostringstream p;
    p << "Role: You are a meticulous AI research assistant specializing in semantic analysis.\n"
         "\n"
         "Objective: Analyze the provided text segment and identify all distinct, high-level "
         "conceptual topics it discusses. For each topic, generate a focused description and a "
         "one-sentence summary.\n"
         "\n"
         "Instructions:\n"
         "1. Read the entire segment carefully to understand its content.\n"
         "2. Identify conceptual themes, not just keywords. For example, a discussion about "
         "\"server uptime requirements\" and \"disaster recovery protocols\" should be identified "
         "as a topic like \"System Reliability and Business Continuity.\"\n"
         "3. Generate a unique name for each topic that is a noun phrase.\n"
         "4. Generate a description that crisply summarizes the topic's scope.\n"
         "5. Format your response as valid JSON containing a list under the key \"topics\".\n"
         "\n"
         "Text Segment:\n"
      << segment_text
      << "\n"
         "\n"
         "Response Format:\n"
         "{\n"
         "  \"topics\": [\n"
         "    {\n"
         "      \"name\": \"[Topic Name]\",\n"
         "      \"description\": \"[Brief description]\"\n"
         "    }\n"
         "  ]\n"
         "}\n";
    return {p.str(), {{"task", "topic_extraction"}, {"segment", segment_text}}};
}

Rendered relevance_check(const std::string& topic_name, const std::string& topic_description,
                         const std::string& segment_text) {
    std::ostringstream p;
    p << "Role: You are an AI relevance classifier making strict binary judgments.\n"
         "\n"
         "Topic Name: "
      << topic_name
      << "\n"
         "\n"
         "Topic Description: "
      << topic_description
      << "\n"
         "\n"
         "Text Segment: "
      << segment_text
      << "\n"
         "\n"
         "Question: Does the text segment above contain information that is directly and "
         "substantively relevant to the topic?\n"
         "\n"
         "Respond with only a single word: \"true\" or \"false\".\n";
    return {p.str(),
            {{"task", "relevance"},
             {"topic_name", topic_name},
             {"topic_description", topic_description},
             {"segment", segment_text}}};
}

Rendered knowledge_synthesis(const std::string& topic_name, const std::string& topic_description,
                             const std::vector<std::string>& fragments) {
    std::ostringstream p;
    p << "Role: You are an expert AI knowledge synthesizer.\n"
         "\n"
         "Objective: Synthesize the provided source fragments into a single, well-structured, "
         "coherent document that comprehensively explains the topic.\n"
         "\n"
         "Topic: "
      << topic_name
      << "\n"
         "\n"
         "Topic Description: "
      << topic_description
      << "\n"
         "\n"
         "Source Fragments:\n";
    for (const auto& fragment : fragments) {
        p << "- \"" << fragment << "\"\n";
    }
    p << "\n"
         "Instructions:\n"
         "1. Comprehensiveness: Include every piece of relevant information from the sources.\n"
         "2. Coherence: Weave information into a logical narrative with clear structure.\n"
         "3. Fidelity: Adhere strictly to source information. Do not add external knowledge. If "
         "sources conflict, note the contradiction.\n"
         "4. Conciseness: Remove redundancy. If multiple fragments state the same fact, present "
         "it once.\n"
         "5. Attribution: Note which sources contributed key information where appropriate.\n"
         "\n"
         "Respond only with the synthesized document text.\n";
    return {p.str(),
            {{"task", "synthesis"},
             {"topic_name", topic_name},
             {"topic_description", topic_description},
             {"fragments", join_list(fragments)}}};
}

Rendered canonical_naming(const std::vector<std::pair<std::string, std::string>>& members) {
    std::ostringstream p;
    p << "The following topic entries were extracted from different text segments and refer to "
         "the same underlying concept.\n"
         "\n";
    std::vector<std::string> names;
    std::vector<std::string> descriptions;
    for (const auto& [name, description] : members) {
        p << "- " << name << ": " << description << "\n";
        names.push_back(name);
        descriptions.push_back(description);
    }
    p << "\n"
         "Produce one canonical topic for the whole group: a noun-phrase name and a one-sentence "
         "description covering the members' shared scope.\n"
         "\n"
         "Respond as valid JSON: {\"name\": \"[Canonical Name]\", \"description\": \"[One-sentence "
         "description]\"}\n";
    return {p.str(),
            {{"task", "canonical_naming"},
             {"member_names", join_list(names)},
             {"member_descriptions", join_list(descriptions)}}};
}

Rendered chunk_context(const std::string& title, const std::string& lead,
                       const std::string& chunk_text) {
    std::ostringstream p;
    p << "Document title: " << title
      << "\n"
         "\n"
         "Document opening:\n"
      << lead
      << "\n"
         "\n"
         "Chunk:\n"
      << chunk_text
      << "\n"
         "\n"
         "Write a short context of at most 100 tokens that situates this chunk within its source "
         "document, so the chunk can be understood on its own. Respond with the context only.\n";
    return {p.str(),
            {{"task", "chunk_context"}, {"title", title}, {"lead", lead}, {"chunk", chunk_text}}};
}

Rendered grounded_answer(const std::string& question, const std::vector<std::string>& contexts) {
    std::ostringstream p;
    p << "You are a question answering assistant. Answer the question using only the provided "
         "context. If the context does not contain the information needed, reply exactly "
         "\"insufficient context\".\n"
         "\n"
         "Context:\n";
    for (std::size_t i = 0; i < contexts.size(); ++i) {
        p << "[" << (i + 1) << "] " << contexts[i] << "\n\n";
    }
    p << "Question: " << question
      << "\n"
         "\n"
         "Answer:\n";
    return {p.str(),
            {{"task", "generation"}, {"question", question}, {"context", join_list(contexts)}}};
}

Rendered claim_decomposition(const std::string& answer) {
    std::ostringstream p;
    p << "Break the following answer into its atomic factual claims. Respond with a numbered "
         "list, one claim per line, and nothing else.\n"
         "\n"
         "Answer: "
      << answer << "\n";
    return {p.str(), {{"task", "judge_claims"}, {"answer", answer}}};
}

Rendered claim_support(const std::string& claim, const std::string& context) {
    std::ostringstream p;
    p << "Context:\n"
      << context
      << "\n"
         "\n"
         "Claim: "
      << claim
      << "\n"
         "\n"
         "Question: Can the claim be verified from the context above?\n"
         "\n"
         "Respond with only a single word: \"true\" or \"false\".\n";
    return {p.str(), {{"task", "judge_claim_support"}, {"claim", claim}, {"context", context}}};
}

Rendered chunk_relevance(const std::string& question, const std::string& chunk_text) {
    std::ostringstream p;
    p << "Role: You are an AI relevance classifier making strict binary judgments.\n"
         "\n"
         "Topic Name: "
      << question
      << "\n"
         "\n"
         "Topic Description: Information that helps answer this question.\n"
         "\n"
         "Text Segment: "
      << chunk_text
      << "\n"
         "\n"
         "Question: Does the text segment above contain information that is directly and "
         "substantively relevant to the topic?\n"
         "\n"
         "Respond with only a single word: \"true\" or \"false\".\n";
    return {p.str(),
            {{"task", "judge_chunk_relevance"}, {"question", question}, {"chunk", chunk_text}}};
}

Rendered fact_attribution(const std::string& fact, const std::string& context) {
    std::ostringstream p;
    p << "Retrieved text:\n"
      << context
      << "\n"
         "\n"
         "Statement: "
      << fact
      << "\n"
         "\n"
         "Question: Is the statement attributable to the retrieved text above?\n"
         "\n"
         "Respond with only a single word: \"true\" or \"false\".\n";
    return {p.str(), {{"task", "judge_fact_attribution"}, {"fact", fact}, {"context", context}}};
}

const std::string& json_retry_suffix() {
    static const std::string suffix =
        "\n\nYour previous reply was not valid JSON. Respond with valid JSON only.\n";
    return suffix;
}

const std::string& binary_retry_suffix() {
    static const std::string suffix =
        "\n\nRespond with only the single word \"true\" or \"false\", nothing else.\n";
    return suffix;
}

}  // namespace cdta::prompts
