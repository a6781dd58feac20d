#include "kad/reach.hpp"

namespace kad {

std::vector<LawReport> check_star_preimage_laws(const DomainStructure& d) {
  return star_preimage_laws(d);
}

}  // namespace kad
