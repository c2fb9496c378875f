#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ssp {

/// Where the expected value of a check comes from: a tabulated datum, a
/// closed form evaluated by the library, or an independent brute-force run.
enum class Provenance { Embedded, Computed, Derived };

const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct ReportCase {
  std::string id;
  std::string expected;
  std::string actual;
  bool pass = false;
  Provenance provenance = Provenance::Computed;
  /// Recorded discrepancy that does not count as a failure.
  bool advisory = false;

  friend bool operator==(const ReportCase&, const ReportCase&) = default;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<ReportCase>& cases() const { return cases_; }

  void add(ReportCase c);
  /// expected == actual decides pass.
  void check(std::string id, const std::string& expected, const std::string& actual,
             Provenance prov = Provenance::Computed);
  /// Keeps string literals away from the bool overload below.
  void check(std::string id, const char* expected, const std::string& actual, Provenance prov = Provenance::Computed) {
    check(std::move(id), std::string(expected), actual, prov);
  }
  void check(std::string id, bool ok, const std::string& detail = "", Provenance prov = Provenance::Computed);
  void advise(std::string id, const std::string& expected, const std::string& actual,
              Provenance prov = Provenance::Computed);
  void merge(const VerificationReport& other);
  /// Orders cases by id; ids are built with zero-padded numbers so this is
  /// also type-then-rank order.
  void sort();

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t advisories() const;
  bool ok() const { return failed() == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

 private:
  std::string suite_;
  std::vector<ReportCase> cases_;
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
/// id, expected, actual, pass, provenance, advisory
void write_tsv(const VerificationReport& r, std::ostream& out);

/// Zero-padded decimal, for sortable case ids.
std::string pad(unsigned long v, int width = 3);

}  // namespace ssp
