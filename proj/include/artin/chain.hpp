#pragma once

// Quotient steps and chains of them, plus a builder that lifts steps acting
// on one factor of a direct product to steps on the whole product.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/descriptor.hpp"

namespace artin::decompose {

enum class KernelClass { Trivial, Free, PolyFree };

std::string to_string(KernelClass k);

// Justification tags carried by steps.
namespace tag {
inline constexpr const char* kRetraction = "L2.3";         // R on one even dihedral factor
inline constexpr const char* kSpherical = "L2.4";          // spherical clique factorisation / Z normalisation
inline constexpr const char* kFreeProduct = "L2.5";        // components split, or one level of component chains
inline constexpr const char* kKernelFree = "L2.6/R2.7";    // reserved: generic amalgam kernel argument
inline constexpr const char* kCliqueSplit = "P2.9";        // pi_st x pi_rest at a vertex
inline constexpr const char* kEdgeAddition = "L3.1";
inline constexpr const char* kChi = "L3.4";                // chi onto Z for a single edge
inline constexpr const char* kTreeFold = "P3.6";           // leaf folded onto its neighbour
inline constexpr const char* kJoin = "C3.7";               // 2-join as a direct product
inline constexpr const char* kCoordinate = "product-coordinate";
inline constexpr const char* kCompletion = "completion-T3.3";
}  // namespace tag

struct QuotientStep {
  GroupDescriptor source;
  GroupDescriptor target;
  std::string map;  // symbolic description of the generator images
  KernelClass kernel = KernelClass::Free;
  int kernel_length = 0;  // PolyFree only
  std::string justification;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  // Index into source.factors() when the step acts on one entry of a
  // direct product and fixes the others.
  std::optional<std::size_t> coordinate;
  // L2.5 level steps: one entry per factor of the free product source, in
  // order; nullopt leaves that factor unchanged.
  std::vector<std::optional<QuotientStep>> parts;

  // The factor the step acts on and its image.
  GroupDescriptor local_source;
  GroupDescriptor local_target;
};

// A step before it is placed into a larger state.
struct LocalStep {
  GroupDescriptor from;
  GroupDescriptor to;
  std::string map;
  KernelClass kernel = KernelClass::Free;
  std::string justification;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  std::vector<std::optional<QuotientStep>> parts;
};

struct Chain {
  GroupDescriptor start;
  std::vector<QuotientStep> steps;

  const GroupDescriptor& end() const { return steps.empty() ? start : steps.back().target; }
  int free_steps() const;
};

class ChainBuilder {
 public:
  explicit ChainBuilder(GroupDescriptor start) : chain_{start, {}}, state_(std::move(start)) {}

  const GroupDescriptor& state() const { return state_; }

  // Applies `step` to the whole state if it equals step.from, otherwise to
  // the first factor of the product state equal to step.from. Throws
  // PreconditionError if neither exists.
  void apply(LocalStep step);
  // Replays another chain's steps; its start must occur in the state.
  void replay(const Chain& sub);

  Chain finish() && { return std::move(chain_); }

 private:
  Chain chain_;
  GroupDescriptor state_;
};

// {"source","target","map","kernel","justification","evidence"}; the
// coordinate and level parts are stored inside evidence.
nlohmann::ordered_json to_json(const QuotientStep& s);
nlohmann::ordered_json to_json(const Chain& c);

}  // namespace artin::decompose
