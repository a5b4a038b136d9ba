#pragma once

#include <string>
#include <vector>

#include "equicat/group.hpp"

namespace equicat {

struct CorpusInstance {
  std::string g_name, pi_name;
  GroupPtr g, pi;
  GroupAction action;
  int action_index = 0;
};

// The named small groups the corpus draws from, ordered by (order, name).
const std::vector<std::string>& corpus_group_names();

// Every (G, Pi, action) with |Pi| * |G| <= max_gamma from the named list,
// with all actions from automorphism_actions. Seedless and deterministic.
std::vector<CorpusInstance> corpus_pairs(int max_gamma);

// Action selector: "trivial", "inversion", or "auto:<index>" into
// automorphism_actions(g, pi).
GroupAction action_by_name(GroupPtr g, GroupPtr pi, const std::string& name);

}  // namespace equicat
