#include "kad/law_report.hpp"

#include <ostream>
#include <stdexcept>

namespace kad {

std::uint64_t LawReport::witness_id(const std::string& var) const {
  for (const auto& b : witness) {
    if (b.var == var) return b.id;
  }
  throw std::out_of_range("witness has no variable '" + var + "'");
}

LawReport not_applicable(std::string law, std::string why) {
  LawReport r;
  r.law = std::move(law);
  r.status = LawStatus::not_applicable;
  r.note = std::move(why);
  return r;
}

bool all_hold(std::span<const LawReport> reports) {
  for (const auto& r : reports) {
    if (r.fails()) return false;
  }
  return true;
}

const LawReport* find_law(std::span<const LawReport> reports, const std::string& law) {
  for (const auto& r : reports) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::holds: return "holds";
    case LawStatus::fails: return "FAILS";
    case LawStatus::not_applicable: return "n/a";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const LawReport& r) {
  os << r.law << ": " << to_string(r.status);
  if (r.status != LawStatus::not_applicable) {
    os << " (" << r.cases << (r.exhaustive ? " cases" : " sampled cases") << ")";
  }
  if (!r.witness.empty()) {
    os << " witness";
    for (const auto& b : r.witness) os << ' ' << b.var << '=' << b.value;
  }
  if (!r.note.empty()) os << " [" << r.note << "]";
  return os;
}

}  // namespace kad
