#include "artin/chain.hpp"

#include "artin/error.hpp"

namespace artin::decompose {

std::string to_string(KernelClass k) {
  switch (k) {
    case KernelClass::Trivial:
      return "trivial";
    case KernelClass::Free:
      return "free";
    case KernelClass::PolyFree:
      return "poly_free";
  }
  return "?";
}

int Chain::free_steps() const {
  int n = 0;
  for (const auto& s : steps) n += s.kernel == KernelClass::Free ? 1 : 0;
  return n;
}

void ChainBuilder::apply(LocalStep step) {
  QuotientStep out;
  out.source = state_;
  out.map = std::move(step.map);
  out.kernel = step.kernel;
  out.justification = std::move(step.justification);
  out.evidence = std::move(step.evidence);
  out.parts = std::move(step.parts);
  out.local_source = step.from;
  out.local_target = step.to;

  if (state_ == step.from) {
    out.target = step.to;
  } else if (state_.is(GroupDescriptor::Kind::Product)) {
    const auto& entries = state_.factors();
    std::size_t i = 0;
    while (i < entries.size() && entries[i] != step.from) ++i;
    if (i == entries.size()) {
      throw PreconditionError("step source " + to_string(step.from) + " does not occur in " + to_string(state_));
    }
    std::vector<GroupDescriptor> next;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j != i) next.push_back(entries[j]);
    }
    next.push_back(step.to);
    out.target = GroupDescriptor::product(std::move(next));
    out.coordinate = i;
  } else {
    throw PreconditionError("step source " + to_string(step.from) + " does not match " + to_string(state_));
  }

  state_ = out.target;
  chain_.steps.push_back(std::move(out));
}

void ChainBuilder::replay(const Chain& sub) {
  for (const auto& s : sub.steps) {
    apply(LocalStep{s.local_source, s.local_target, s.map, s.kernel, s.justification, s.evidence, s.parts});
  }
}

nlohmann::ordered_json to_json(const QuotientStep& s) {
  nlohmann::ordered_json out;
  out["source"] = to_json(s.source);
  out["target"] = to_json(s.target);
  out["map"] = s.map;
  out["kernel"] = to_string(s.kernel);
  if (s.kernel == KernelClass::PolyFree) out["kernel_length"] = s.kernel_length;
  out["justification"] = s.justification;
  nlohmann::ordered_json evidence = s.evidence;
  if (s.coordinate) evidence["coordinate"] = *s.coordinate;
  if (!s.parts.empty()) {
    auto parts = nlohmann::ordered_json::array();
    for (const auto& p : s.parts) parts.push_back(p ? to_json(*p) : nlohmann::ordered_json(nullptr));
    evidence["parts"] = std::move(parts);
  }
  out["evidence"] = std::move(evidence);
  return out;
}

nlohmann::ordered_json to_json(const Chain& c) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& s : c.steps) out.push_back(to_json(s));
  return out;
}

}  // namespace artin::decompose
