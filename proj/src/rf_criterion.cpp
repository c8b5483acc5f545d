#include "convexa/rf_criterion.hpp"

#include <algorithm>
#include <thread>

#include "convexa/errors.hpp"

namespace convexa {

namespace {

bool some_contains(const NeuralCode& code, NeuronSet s) {
  for (NeuronSet c : code) {
    if (s.is_subset_of(c)) return true;
  }
  return false;
}

// Every codeword holding `a` also holds b or c.
bool covered(const NeuralCode& code, int a, int b, int c) {
  for (NeuronSet w : code) {
    if (w.contains(a) && !w.contains(b) && !w.contains(c)) return false;
  }
  return true;
}

}  // namespace

TupleCheck check_tuple(const NeuralCode& code, const RFTuple& t) {
  for (int x : {t.i, t.j, t.k, t.l, t.m}) {
    if (x < 1 || x > code.n()) throw InvalidArgument("tuple index " + std::to_string(x) + " outside 1..n");
  }
  TupleCheck out;
  out.rows[0] = some_contains(code, NeuronSet{t.i, t.j, t.k});
  out.rows[1] = some_contains(code, NeuronSet{t.i, t.j, t.m});
  out.rows[2] = some_contains(code, NeuronSet{t.k, t.l, t.m});
  out.rows[3] = !some_contains(code, NeuronSet{t.i, t.j, t.k, t.l});
  out.rows[4] = !some_contains(code, NeuronSet{t.i, t.j, t.k, t.m});
  out.rows[5] = covered(code, t.k, t.j, t.l);
  out.rows[6] = covered(code, t.j, t.i, t.k);
  return out;
}

namespace {

void scan_first_index(const NeuralCode& code, int first, int stride, std::vector<RFMatch>& out) {
  const int n = code.n();
  for (int i = first; i <= n; i += stride)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        // Row 1 depends on (i,j,k) only; skip the inner loops early.
        if (!some_contains(code, NeuronSet{i, j, k}) || !covered(code, j, i, k)) continue;
        for (int l = 1; l <= n; ++l)
          for (int m = 1; m <= n; ++m) {
            RFTuple t{i, j, k, l, m};
            TupleCheck c = check_tuple(code, t);
            if (c.passes()) out.push_back(RFMatch{t, c});
          }
      }
}

}  // namespace

std::vector<RFMatch> search_rf_obstruction(const NeuralCode& code, int threads) {
  const int workers = std::max(1, std::min(threads, std::max(code.n(), 1)));
  std::vector<RFMatch> out;
  if (workers == 1) {
    scan_first_index(code, 1, 1, out);
    return out;
  }
  std::vector<std::vector<RFMatch>> parts(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back([&, w] { scan_first_index(code, w + 1, workers, parts[w]); });
  for (auto& th : pool) th.join();
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const RFMatch& a, const RFMatch& b) { return a.tuple < b.tuple; });
  return out;
}

ObstructionCertificate rf_certificate(const RFMatch& match) {
  ObstructionCertificate cert;
  cert.kind = CertificateKind::RFTuple;
  cert.tuple = match.tuple;
  cert.rows = match.check;
  return cert;
}

namespace {

bool has(const CanonicalForm& cf, NeuronSet sigma, NeuronSet tau) {
  if (sigma.intersects(tau)) return false;
  return std::find(cf.begin(), cf.end(), PseudoMonomial{sigma, tau}) != cf.end();
}

// Some x_s with s ⊆ scope is in cf.
bool has_monomial_within(const CanonicalForm& cf, NeuronSet scope) {
  for (const auto& pm : cf) {
    if (pm.tau.empty() && pm.sigma.is_subset_of(scope)) return true;
  }
  return false;
}

}  // namespace

bool cf_criterion(const CanonicalForm& cf, const RFTuple& t) {
  return has(cf, NeuronSet{t.i, t.k}, NeuronSet{t.j}) && has(cf, NeuronSet{t.j, t.m}, NeuronSet{t.i}) &&
         has(cf, NeuronSet{t.k, t.m}, NeuronSet{t.l}) && has_monomial_within(cf, NeuronSet{t.i, t.j, t.k, t.l}) &&
         has_monomial_within(cf, NeuronSet{t.i, t.j, t.k, t.m}) && has(cf, NeuronSet{t.k}, NeuronSet{t.j, t.l}) &&
         has(cf, NeuronSet{t.j}, NeuronSet{t.i, t.k});
}

std::vector<NeuronSet> safe_codeword_additions(const NeuralCode& code, const RFTuple& t) {
  if (!check_tuple(code, t).passes()) throw InvalidArgument("tuple does not pass the criterion on this code");
  if (code.n() > 20) throw BudgetExceeded("safe additions enumerate 2^n candidates; n exceeds 20");
  const NeuronSet ijkl{t.i, t.j, t.k, t.l};
  const NeuronSet ijkm{t.i, t.j, t.k, t.m};
  std::vector<NeuronSet> out;
  const std::uint64_t limit = std::uint64_t{1} << code.n();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    NeuronSet s = NeuronSet::from_mask(mask);
    if (code.contains(s)) continue;
    if (ijkl.is_subset_of(s) || ijkm.is_subset_of(s)) continue;
    if (s.contains(t.k) && !s.contains(t.j) && !s.contains(t.l)) continue;
    if (s.contains(t.j) && !s.contains(t.i) && !s.contains(t.k)) continue;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace convexa
