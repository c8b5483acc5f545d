#pragma once

#include <optional>

#include "convexa/certificate.hpp"

namespace convexa {

// (R, ∪) is rigid when the containment graph of {tau : tau ∩ R ≠ ∅} is a path
// obeying the triplewise condition.  With sigma_prime the test runs on the
// code restricted to sigma_prime (R ⊆ sigma_prime required).
std::optional<RigidWitness> path_rigidity_witness(const NeuralCode& code, NeuronSet R,
                                                  std::optional<NeuronSet> sigma_prime = std::nullopt);

RigidWitness intersection_witness(NeuronSet R);

// Codewords meeting (union mode) or containing (intersection mode) both
// supports.  Never contains the empty codeword.
NeuralCode distinguished_subcode(const NeuralCode& code, const RigidWitness& w1, const RigidWitness& w2);

// Certificate iff the distinguished subcode's containment graph is
// disconnected.  Throws InvalidArgument when a witness does not verify.
std::optional<ObstructionCertificate> rigid_pair_obstruction(const NeuralCode& code, const RigidWitness& w1,
                                                             const RigidWitness& w2);

std::optional<ObstructionCertificate> cycle_criterion(const NeuralCode& code);

struct RigidSearchBudget {
  int max_support = 4;
  long long max_pairs = 5'000'000;
  bool try_cycle = true;
  bool collect_all = false;  // keep going after the first certificate
};

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct RigidSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<ObstructionCertificate> certificate;
  std::vector<ObstructionCertificate> all;  // filled when collect_all
  long long pairs_tested = 0;
  std::size_t union_witnesses = 0;
  std::size_t candidate_supports = 0;
};

// Candidate supports in canonical order: nonempty codewords, nonempty
// complements of codewords, then all subsets of size <= max_support.
std::vector<NeuronSet> candidate_supports(const NeuralCode& code, int max_support);

RigidSearchResult search_rigid_obstruction(const NeuralCode& code, const RigidSearchBudget& budget = {});

}  // namespace convexa
