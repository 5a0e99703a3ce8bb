#include "qfrob/report.hpp"

#include <cmath>
#include <sstream>

namespace {
// The serialized forms carry whole milliseconds; the in-memory field keeps
// sub-millisecond resolution.
std::int64_t whole_ms(double elapsed) {
  return static_cast<std::int64_t>(std::llround(elapsed));
}
}  // namespace

namespace qfrob {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::verified:
      return "verified";
    case VerifyStatus::violated:
      return "violated";
    case VerifyStatus::infeasible:
      return "infeasible";
  }
  return "unknown";
}

static nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j;
  j["n"] = w.n;
  j["coefficient"] = w.coefficient.get_str();
  if (w.valuation)
    j["valuation"] = *w.valuation;
  else
    j["valuation"] = "inf";
  return j;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["range"] = {{"n_max", r.n_max}, {"N", r.N}};
  j["witnesses"] = nlohmann::json::array();
  for (const Witness& w : r.witnesses) j["witnesses"].push_back(witness_to_json(w));
  j["elapsed_ms"] = whole_ms(r.elapsed_ms);
  return j;
}

static std::string valuation_str(const Witness& w) {
  return w.valuation ? std::to_string(*w.valuation) : std::string("inf");
}

std::string report_to_tsv(const VerificationReport& r) {
  std::ostringstream out;
  out << r.id << '\t' << to_string(r.status) << '\t' << r.n_max << '\t' << r.N
      << '\t';
  bool first = true;
  for (const Witness& w : r.witnesses) {
    if (!first) out << ';';
    first = false;
    out << w.n << ':' << w.coefficient.get_str() << ':' << valuation_str(w);
  }
  out << '\t' << whole_ms(r.elapsed_ms);
  return out.str();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << r.id << ": " << to_string(r.status) << " (n_max=" << r.n_max
      << ", N=" << r.N << ")\n";
  for (const Witness& w : r.witnesses)
    out << "  witness n=" << w.n << " coefficient=" << w.coefficient.get_str()
        << " valuation=" << valuation_str(w) << "\n";
  out << "  elapsed_ms=" << whole_ms(r.elapsed_ms) << "\n";
  return out.str();
}

}  // namespace qfrob
