#include "equicat/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace equicat {

const std::vector<std::string>& corpus_group_names() {
  static const std::vector<std::string> names = {
      "C1", "C2", "C3", "C4", "D2", "C5", "C6", "S3", "C7", "C8", "D4",
      "Q8", "C9", "D5", "C12", "D6", "A4", "S4",
  };
  return names;
}

std::vector<CorpusInstance> corpus_pairs(int max_gamma) {
  std::vector<CorpusInstance> out;
  for (const auto& gn : corpus_group_names()) {
    auto g = make_named(gn);
    if (g->order > max_gamma) continue;
    for (const auto& pn : corpus_group_names()) {
      auto pi = make_named(pn);
      if (static_cast<long>(g->order) * pi->order > max_gamma) continue;
      auto actions = automorphism_actions(g, pi);
      for (size_t i = 0; i < actions.size(); ++i) {
        CorpusInstance inst;
        inst.g_name = gn;
        inst.pi_name = pn;
        inst.g = g;
        inst.pi = pi;
        inst.action = actions[i];
        inst.action_index = static_cast<int>(i);
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

GroupAction action_by_name(GroupPtr g, GroupPtr pi, const std::string& name) {
  if (name.empty() || name == "trivial") return trivial_action(g, pi);
  if (name == "inversion") return inversion_action(g, pi);
  if (name.rfind("auto:", 0) == 0) {
    int idx = std::stoi(name.substr(5));
    auto actions = automorphism_actions(g, pi);
    if (idx < 0 || idx >= static_cast<int>(actions.size()))
      throw std::invalid_argument("action index out of range (have " +
                                  std::to_string(actions.size()) + ")");
    return actions[idx];
  }
  throw std::invalid_argument("unknown action selector: " + name);
}

}  // namespace equicat
