#pragma once

#include <json.hpp>

#include "convexa/certificate.hpp"
#include "convexa/geometry/realization.hpp"
#include "convexa/neural_ideal.hpp"
#include "convexa/rf_criterion.hpp"

namespace convexa {

using Json = nlohmann::ordered_json;

Json to_json(NeuronSet s);
Json to_json(const std::vector<NeuronSet>& words);
Json to_json(const NeuralCode& code);
Json to_json(const PseudoMonomial& pm);
Json to_json(const CanonicalForm& cf);
Json to_json(const std::vector<RFRelation>& rels);
Json to_json(const LinearOrdering& ord);
Json to_json(const ContainmentGraph& g);
Json to_json(const RigidWitness& w);
Json to_json(const ObstructionCertificate& cert);
Json to_json(const std::vector<RFMatch>& matches);
Json to_json(const Realization& r);

NeuronSet neuron_set_from_json(const Json& j);
PseudoMonomial pseudo_monomial_from_json(const Json& j);
LinearOrdering ordering_from_json(const Json& j);
RigidWitness witness_from_json(const Json& j);
ObstructionCertificate certificate_from_json(const Json& j);
// Throws ParseError.
Realization realization_from_json(const Json& j);
Realization parse_realization(const std::string& text);

}  // namespace convexa
