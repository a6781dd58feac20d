#include "kad/termination.hpp"

namespace kad {

std::vector<LawReport> check_termination_laws(const DomainStructure& d) {
  return termination_laws(d);
}

}  // namespace kad
