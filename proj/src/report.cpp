#include "sspkit/report.hpp"

#include <algorithm>
#include <cstdio>

#include "sspkit/errors.hpp"

namespace ssp {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Embedded: return "embedded";
    case Provenance::Computed: return "computed";
    case Provenance::Derived: return "derived";
  }
  return "?";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "embedded") return Provenance::Embedded;
  if (s == "computed") return Provenance::Computed;
  if (s == "derived") return Provenance::Derived;
  throw Error(ErrorCode::ParseError, "unknown provenance '" + s + "'");
}

void VerificationReport::add(ReportCase c) { cases_.push_back(std::move(c)); }

void VerificationReport::check(std::string id, const std::string& expected, const std::string& actual,
                               Provenance prov) {
  add({std::move(id), expected, actual, expected == actual, prov, false});
}

void VerificationReport::check(std::string id, bool ok, const std::string& detail, Provenance prov) {
  add({std::move(id), "true", ok ? "true" : (detail.empty() ? "false" : "false: " + detail), ok, prov, false});
}

void VerificationReport::advise(std::string id, const std::string& expected, const std::string& actual,
                                Provenance prov) {
  add({std::move(id), expected, actual, expected == actual, prov, true});
}

void VerificationReport::merge(const VerificationReport& other) {
  cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
}

void VerificationReport::sort() {
  std::stable_sort(cases_.begin(), cases_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

std::size_t VerificationReport::passed() const {
  return std::count_if(cases_.begin(), cases_.end(), [](const auto& c) { return c.pass; });
}

std::size_t VerificationReport::failed() const {
  return std::count_if(cases_.begin(), cases_.end(), [](const auto& c) { return !c.pass && !c.advisory; });
}

std::size_t VerificationReport::advisories() const {
  return std::count_if(cases_.begin(), cases_.end(), [](const auto& c) { return !c.pass && c.advisory; });
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases()) {
    cases.push_back({{"id", c.id},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"pass", c.pass},
                     {"provenance", to_string(c.provenance)},
                     {"advisory", c.advisory}});
  }
  return {{"suite", r.suite()},
          {"cases", cases},
          {"summary", {{"total", r.cases().size()}, {"passed", r.passed()}, {"failed", r.failed()},
                       {"advisory", r.advisories()}}}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r(j.at("suite").get<std::string>());
    for (const auto& c : j.at("cases")) {
      r.add({c.at("id").get<std::string>(), c.at("expected").get<std::string>(), c.at("actual").get<std::string>(),
             c.at("pass").get<bool>(), provenance_from_string(c.at("provenance").get<std::string>()),
             c.value("advisory", false)});
    }
    const auto& s = j.at("summary");
    if (s.at("total").get<std::size_t>() != r.cases().size() || s.at("passed").get<std::size_t>() != r.passed() ||
        s.at("failed").get<std::size_t>() != r.failed())
      throw Error(ErrorCode::ParseError, "report summary does not match its cases");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

void write_tsv(const VerificationReport& r, std::ostream& out) {
  out << "id\texpected\tactual\tpass\tprovenance\tadvisory\n";
  for (const auto& c : r.cases())
    out << c.id << '\t' << c.expected << '\t' << c.actual << '\t' << (c.pass ? "true" : "false") << '\t'
        << to_string(c.provenance) << '\t' << (c.advisory ? "true" : "false") << '\n';
}

std::string pad(unsigned long v, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*lu", width, v);
  return buf;
}

}  // namespace ssp
