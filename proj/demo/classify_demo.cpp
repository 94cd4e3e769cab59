// Minimal library walkthrough: enumerate the n = 4 candidates, classify one
// signature end to end, and print the certified invariants.

#include "gts/enumeration.hpp"
#include "gts/isolated.hpp"
#include "gts/record.hpp"

#include <iostream>

int main() {
  auto set = gts::enumerate_candidates(4);
  std::size_t hypersurfaces = 0;
  for (const auto& sig : set.signatures)
    if (gts::classify(sig).is_hypersurface()) ++hypersurfaces;
  std::cout << set.signatures.size() << " unit-fraction candidates for n = 4, "
            << hypersurfaces << " of them hypersurfaces\n\n";

  gts::Signature sig = gts::derive(std::vector<std::int64_t>{2, 3, 9, 21});
  auto cls = gts::classify(sig);
  auto rec = gts::make_record(sig, cls);
  std::cout << "signature " << sig.to_string() << ": " << rec.status << "\n";
  std::cout << "  generators: ";
  for (const auto& g : rec.generators) std::cout << g << " ";
  std::cout << "\n  weights: (";
  for (std::size_t i = 0; i < rec.weights.size(); ++i)
    std::cout << (i ? "," : "") << rec.weights[i].str();
  std::cout << ";" << rec.h.str() << ")\n";
  std::cout << "  relation: " << rec.relation << "\n";

  auto cert = gts::make_series_certificate(sig, cls.presentation->weights, cls.presentation->h);
  std::cout << "  series identity: " << (cert.checks.identity ? "holds" : "fails")
            << ", a-invariant " << gts::a_invariant(rec.weights, rec.h).str() << "\n";
  return 0;
}
