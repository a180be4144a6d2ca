#include "tot/classification.hpp"

#include <stdexcept>

#include "tot/symmetry.hpp"

namespace tot {

Classification classify(const TorusPoint& p) {
  Classification c;
  c.point = p;
  c.orientation = orientation(p);
  c.degenerate = p.degenerate();
  c.preimages = rho_preimages(p);
  c.flags = taxonomy(c.preimages.front());
  for (const auto& t : c.preimages) {
    if (taxonomy(t) != c.flags) throw std::logic_error("preimages of " + p.str() + " disagree on triangle type");
  }
  c.loci = loci_containing(p);
  c.multiplicity = multiplicity(p);
  c.canonical = canonical_rep(p);
  return c;
}

}  // namespace tot
