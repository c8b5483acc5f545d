#pragma once

#include <array>
#include <optional>
#include <vector>

#include "convexa/code.hpp"
#include "convexa/containment_graph.hpp"

namespace convexa {

enum class RigidMode { Union, Intersection };

// (support, mode) whose union/intersection is convex in every closed-convex
// realization.  Union witnesses carry the path ordering that certifies them,
// built over the code restricted (in place) to `restricted_to`.
struct RigidWitness {
  NeuronSet support;
  RigidMode mode = RigidMode::Intersection;
  std::optional<LinearOrdering> path;
  NeuronSet restricted_to;

  friend bool operator==(const RigidWitness&, const RigidWitness&) = default;
};

struct RFTuple {
  int i = 0, j = 0, k = 0, l = 0, m = 0;
  friend auto operator<=>(const RFTuple&, const RFTuple&) = default;
};

struct TupleCheck {
  std::array<bool, 7> rows{};
  bool passes() const {
    for (bool r : rows)
      if (!r) return false;
    return true;
  }
};

enum class CertificateKind { RigidPair, Cycle, RFTuple };

struct ObstructionCertificate {
  CertificateKind kind = CertificateKind::RigidPair;
  // RigidPair and Cycle
  std::vector<RigidWitness> witnesses;
  std::vector<NeuronSet> subcode;
  std::array<std::vector<NeuronSet>, 2> components;
  // Cycle
  std::optional<LinearOrdering> cycle;
  NeuronSet chosen_r;
  // RFTuple
  std::optional<RFTuple> tuple;
  TupleCheck rows;
};

const char* to_string(RigidMode mode);
const char* to_string(CertificateKind kind);

// Re-derives every claim in the certificate from the raw code.
bool replay(const NeuralCode& code, const ObstructionCertificate& cert);

// Re-checks a single witness against the code.
bool verify_witness(const NeuralCode& code, const RigidWitness& w);

RigidWitness permute(const RigidWitness& w, const std::vector<int>& perm);
ObstructionCertificate permute(const ObstructionCertificate& cert, const std::vector<int>& perm);

}  // namespace convexa
