#pragma once

#include <vector>

#include "convexa/certificate.hpp"
#include "convexa/neural_ideal.hpp"

namespace convexa {

// Row r (0-based here, 1-based in reports):
//  0: some codeword ⊇ {i,j,k}       1: some codeword ⊇ {i,j,m}
//  2: some codeword ⊇ {k,l,m}       3: no codeword ⊇ {i,j,k,l}
//  4: no codeword ⊇ {i,j,k,m}       5: every codeword with k has j or l
//  6: every codeword with j has i or k
// Throws InvalidArgument for indices outside 1..n.
TupleCheck check_tuple(const NeuralCode& code, const RFTuple& t);

struct RFMatch {
  RFTuple tuple;
  TupleCheck check;
};

// Every passing tuple over {1..n}^5 in lexicographic order.
std::vector<RFMatch> search_rf_obstruction(const NeuralCode& code, int threads = 1);

ObstructionCertificate rf_certificate(const RFMatch& match);

bool cf_criterion(const CanonicalForm& cf, const RFTuple& t);

// Non-codewords whose addition keeps all seven rows true.  Throws
// InvalidArgument when the tuple does not pass on the code.
std::vector<NeuronSet> safe_codeword_additions(const NeuralCode& code, const RFTuple& t);

}  // namespace convexa
