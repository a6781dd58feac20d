#include "kad/domain_laws.hpp"

namespace kad {

std::vector<LawReport> check_predomain_calculus(const DomainStructure& d) {
  return predomain_calculus_laws(d, "delta");
}

std::vector<LawReport> check_precodomain_calculus(const DomainStructure& d) {
  return predomain_calculus_laws(Opposite<DomainStructure>(d), "rho");
}

std::vector<LawReport> check_image_laws(const DomainStructure& d) { return image_laws(d); }

std::vector<LawReport> converse_duality_check(const DomainStructure& d) {
  return converse_duality_laws(d);
}

std::vector<LawReport> check_locality(const DomainStructure& d) {
  std::vector<LawReport> out;
  const LawReport criterion = zero_product_criterion(d);
  out.push_back(detail::single_case("zero-product-criterion-iff-dloc",
                                    criterion.holds() == d.flags().dloc));
  out.back().note = "criterion " + to_string(criterion.status);
  out.push_back(detail::single_case("dloc-iff-cdloc", d.flags().dloc == d.flags().cdloc));
  return out;
}

}  // namespace kad
