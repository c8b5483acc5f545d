#include "convexa/certificate.hpp"

#include <algorithm>

#include "convexa/rf_criterion.hpp"
#include "convexa/rigidity.hpp"

namespace convexa {

const char* to_string(RigidMode mode) { return mode == RigidMode::Union ? "union" : "intersection"; }

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::RigidPair:
      return "rigid-pair";
    case CertificateKind::Cycle:
      return "cycle";
    case CertificateKind::RFTuple:
      return "rf-tuple";
  }
  return "unknown";
}

bool verify_witness(const NeuralCode& code, const RigidWitness& w) {
  if (w.support.empty() || !w.support.is_subset_of(code.universe())) return false;
  if (w.mode == RigidMode::Intersection) return !w.path.has_value();
  if (!w.path || w.path->kind != OrderingKind::Path) return false;
  if (!w.support.is_subset_of(w.restricted_to) || !w.restricted_to.is_subset_of(code.universe())) return false;
  std::vector<NeuronSet> members;
  for (NeuronSet s : code) {
    NeuronSet t = s & w.restricted_to;
    if (t.intersects(w.support)) members.push_back(t);
  }
  std::sort(members.begin(), members.end(), LexLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<NeuronSet> listed = w.path->sequence;
  std::sort(listed.begin(), listed.end(), LexLess{});
  if (listed != members) return false;
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) return false;
  return is_induced_ordering(*w.path) && triplewise_condition(*w.path, w.support);
}

namespace {

bool replay_pair(const NeuralCode& code, const ObstructionCertificate& cert) {
  if (cert.witnesses.size() != 2) return false;
  if (!verify_witness(code, cert.witnesses[0]) || !verify_witness(code, cert.witnesses[1])) return false;
  NeuralCode sub = distinguished_subcode(code, cert.witnesses[0], cert.witnesses[1]);
  if (sub.codewords() != cert.subcode) return false;
  ContainmentGraph g(sub.codewords());
  auto comps = g.components();
  if (comps.size() < 2) return false;
  // The recorded components must be two distinct components of the subcode graph.
  std::vector<std::vector<NeuronSet>> actual;
  for (const auto& c : comps) {
    std::vector<NeuronSet> words;
    for (std::size_t v : c) words.push_back(g.vertices()[v]);
    actual.push_back(std::move(words));
  }
  auto find = [&](const std::vector<NeuronSet>& c) { return std::find(actual.begin(), actual.end(), c); };
  auto a = find(cert.components[0]);
  auto b = find(cert.components[1]);
  return a != actual.end() && b != actual.end() && a != b;
}

}  // namespace

bool replay(const NeuralCode& code, const ObstructionCertificate& cert) {
  switch (cert.kind) {
    case CertificateKind::RigidPair:
      return replay_pair(code, cert);
    case CertificateKind::Cycle: {
      if (!cert.cycle || cert.cycle->kind != OrderingKind::Cycle) return false;
      const auto& seq = cert.cycle->sequence;
      if (seq.size() < 4 || !triplewise_condition(*cert.cycle) || !is_induced_ordering(*cert.cycle)) return false;
      std::vector<NeuronSet> listed = seq;
      std::sort(listed.begin(), listed.end(), LexLess{});
      if (listed != code.without_empty().codewords()) return false;
      if (cert.witnesses.size() != 2 || cert.witnesses[0].mode != RigidMode::Intersection ||
          cert.witnesses[0].support != cert.chosen_r) {
        return false;
      }
      if (std::find(seq.begin(), seq.end(), cert.chosen_r) == seq.end()) return false;
      return replay_pair(code, cert);
    }
    case CertificateKind::RFTuple: {
      if (!cert.tuple) return false;
      const RFTuple& t = *cert.tuple;
      for (int x : {t.i, t.j, t.k, t.l, t.m}) {
        if (x < 1 || x > code.n()) return false;
      }
      TupleCheck again = check_tuple(code, t);
      return again.passes() && again.rows == cert.rows.rows;
    }
  }
  return false;
}

RigidWitness permute(const RigidWitness& w, const std::vector<int>& perm) {
  RigidWitness out = w;
  out.support = permute(w.support, perm);
  out.restricted_to = permute(w.restricted_to, perm);
  if (w.path) {
    for (auto& s : out.path->sequence) s = permute(s, perm);
  }
  return out;
}

ObstructionCertificate permute(const ObstructionCertificate& cert, const std::vector<int>& perm) {
  ObstructionCertificate out = cert;
  for (auto& w : out.witnesses) w = permute(w, perm);
  auto relabel = [&](std::vector<NeuronSet>& words) {
    for (auto& s : words) s = permute(s, perm);
    std::sort(words.begin(), words.end(), LexLess{});
  };
  relabel(out.subcode);
  relabel(out.components[0]);
  relabel(out.components[1]);
  if (out.cycle) {
    for (auto& s : out.cycle->sequence) s = permute(s, perm);
  }
  out.chosen_r = permute(cert.chosen_r, perm);
  if (out.tuple) {
    RFTuple& t = *out.tuple;
    t = RFTuple{perm.at(t.i - 1), perm.at(t.j - 1), perm.at(t.k - 1), perm.at(t.l - 1), perm.at(t.m - 1)};
  }
  return out;
}

}  // namespace convexa
