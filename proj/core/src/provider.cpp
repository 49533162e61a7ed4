#include "cdta/provider.hpp"

namespace cdta {

std::string_view role_name(ModelRole role) {
    switch (role) {
        case ModelRole::Extraction: return "extraction";
        case ModelRole::Relevance: return "relevance";
        case ModelRole::Synthesis: return "synthesis";
        case ModelRole::ContextAugment: return "context-augment";
        case ModelRole::Generation: return "generation";
        case ModelRole::Judge: return "judge";
    }
    return "unknown";
}

ModelRole role_from_name(std::string_view name) {
    if (name == "extraction") return ModelRole::Extraction;
    if (name == "relevance") return ModelRole::Relevance;
    if (name == "synthesis") return ModelRole::Synthesis;
    if (name == "context-augment") return ModelRole::ContextAugment;
    if (name == "generation") return ModelRole::Generation;
    if (name == "judge") return ModelRole::Judge;
    throw std::invalid_argument("unknown model role: " + std::string(name));
}

double default_temperature(ModelRole role) {
    switch (role) {
        case ModelRole::Extraction: return 0.3;
        case ModelRole::Synthesis: return 0.7;
        case ModelRole::Relevance:
        case ModelRole::ContextAugment:
        case ModelRole::Generation:
        case ModelRole::Judge: return 0.0;
    }
    return 0.0;
}

}  // namespace cdta
