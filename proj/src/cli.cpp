#include "sspkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sspkit/cells.hpp"
#include "sspkit/conjugacy.hpp"
#include "sspkit/embedded_data.hpp"
#include "sspkit/errors.hpp"

namespace ssp {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_usage(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidRank:
    case ErrorCode::NotSuperspecial:
    case ErrorCode::VariantUnavailable:
    case ErrorCode::OppositionNontrivial:
    case ErrorCode::UnsupportedType:
    case ErrorCode::GuardExceeded:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ParseError: return true;
    default: return false;
  }
}

WeylType selected_type(const RunConfig& c) {
  if (c.type.empty()) throw UsageError("--type is required");
  return WeylType::parse(c.type, c.rank);
}

json factors_json(const FactoredPoly& f) {
  json shape = json::array();
  for (const auto& s : f.shape()) shape.push_back({{"s", s.s}, {"l", s.l}, {"multiplicity", s.multiplicity}});
  json general = json::array();
  for (const auto& g : f.general()) general.push_back({{"poly", to_json(g.poly)}, {"multiplicity", g.multiplicity}});
  return {{"constant", to_json(f.constant())}, {"shape", shape}, {"general", general}};
}

json check_json(const std::string& name, bool pass, const std::string& detail) {
  return {{"name", name}, {"pass", pass}, {"detail", detail}};
}

std::string tsv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flat key/value rendering of a JSON object for --format tsv.
std::string object_tsv(const json& j) {
  std::ostringstream os;
  os << "field\tvalue\n";
  for (const auto& [k, v] : j.items()) os << k << '\t' << tsv_cell(v) << '\n';
  return os.str();
}

bool checks_pass(const json& j) {
  if (!j.contains("checks")) return true;
  for (const auto& c : j["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

std::string set_str(const std::vector<unsigned>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string render_symbols(const RunConfig& c, Format fmt, int& code) {
  const WeylType t = selected_type(c);
  if (!t.classical()) throw UsageError("symbols needs a classical type (A, B, D)");
  const unsigned n = t.param();
  json rows = json::array();
  std::ostringstream os;
  os << "X\tY\tn\talpha\n";
  if (t.family() == Family::A) {
    for (const auto& x : enumerate_a(n)) {
      rows.push_back({{"X", x.to_string()}, {"Y", nullptr}, {"n", rank_a(x)}, {"alpha", alpha_a(x)}});
      os << x.to_string() << "\t\t" << rank_a(x) << '\t' << alpha_a(x) << '\n';
    }
  } else {
    const unsigned d = t.family() == Family::B ? 1 : 0;
    const auto list = c.full ? enumerate_bd_reduced(n, d) : enumerate_bd(n, d);
    for (const auto& s : list) {
      std::string x = set_str(s.x());
      if (s.spin()) x += *s.spin() == Spin::Plus ? "+" : "-";
      rows.push_back({{"X", x}, {"Y", set_str(s.y())}, {"n", rank_bd(s)}, {"alpha", alpha_bd(s)}});
      os << x << '\t' << set_str(s.y()) << '\t' << rank_bd(s) << '\t' << alpha_bd(s) << '\n';
    }
  }
  code = kExitOk;
  if (fmt == Format::Tsv) return os.str();
  return json{{"type", t.name()}, {"count", rows.size()}, {"symbols", rows}}.dump(2) + "\n";
}

std::string render_registry(Format fmt) {
  json arr = json::array();
  std::ostringstream os;
  os << "type\trank\texponents\tr\torder\n";
  for (const auto& t : registry_types()) {
    const GroupData g = group_data(t);
    arr.push_back({{"type", t.name()},
                   {"rank", g.simple_reflection_count},
                   {"exponents", g.exponents},
                   {"op_orbit_count", g.op_orbit_count},
                   {"order", g.order.get_str()},
                   {"crystallographic", t.crystallographic()}});
    std::string ex;
    for (std::size_t i = 0; i < g.exponents.size(); ++i) ex += (i ? "," : "") + std::to_string(g.exponents[i]);
    os << t.name() << '\t' << g.simple_reflection_count << '\t' << ex << '\t' << g.op_orbit_count << '\t'
       << g.order.get_str() << '\n';
  }
  return fmt == Format::Tsv ? os.str() : arr.dump(2) + "\n";
}

json cell_json(const CellDatum& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    json j{{"label", c.label},
           {"c", c.c.get_str()},
           {"b_parity", c.b_parity ? "odd" : "even"},
           {"twin", c.twin},
           {"normal_form", c.normal_form}};
    if (c.index) {
      j["X"] = set_str(c.index->x());
      j["Y"] = set_str(c.index->y());
    } else {
      j["X"] = nullptr;
      j["Y"] = nullptr;
    }
    comps.push_back(j);
  }
  const auto sums = identity_sums(d);
  const auto rep = verify_identities(d);
  json checks = json::array();
  for (const auto& c : rep.cases()) checks.push_back(check_json(c.id, c.pass, c.actual));
  return {{"type", d.type.name()},
          {"variant", variant_name(d.variant)},
          {"components", comps},
          {"inverse_sum", sums.inverse_sum.get_str()},
          {"signed_sum", sums.signed_sum.get_str()},
          {"checks", checks}};
}

std::string cell_tsv(const json& j) {
  std::ostringstream os;
  os << "label\tX\tY\tc\tb_parity\tflags\n";
  for (const auto& c : j["components"]) {
    std::string flags;
    if (c["twin"].get<bool>()) flags += "twin";
    if (!c["normal_form"].get<bool>()) flags += flags.empty() ? "non_normal" : ",non_normal";
    os << c["label"].get<std::string>() << '\t' << tsv_cell(c["X"]) << '\t' << tsv_cell(c["Y"]) << '\t'
       << c["c"].get<std::string>() << '\t' << c["b_parity"].get<std::string>() << '\t' << flags << '\n';
  }
  os << "#inverse_sum\t" << j["inverse_sum"].get<std::string>() << '\n';
  os << "#signed_sum\t" << j["signed_sum"].get<std::string>() << '\n';
  return os.str();
}

json conj_json(const RunConfig& c, const WeylType& t) {
  json j{{"type", t.name()}};
  json checks = json::array();
  if (t.family() == Family::E8) {
    const auto rep = e8_numeric_checks();
    for (const auto& r : rep.cases()) checks.push_back(check_json(r.id, r.pass, r.actual));
    const ClassDesc d = ssp_class(t);
    j["descriptor"] = {{"char_poly", to_json(*d.char_poly)}};
    j["M_expected"] = d.M;
    j["M_found"] = nullptr;
    j["witness"] = nullptr;
    j["class_size"] = nullptr;
    j["checks"] = checks;
    return j;
  }
  const ClassDesc d = ssp_class(t);
  switch (d.kind) {
    case DescriptorKind::NegativeCycles: j["descriptor"] = {{"negative_cycles", d.negative_cycles}}; break;
    case DescriptorKind::CharPoly: j["descriptor"] = {{"char_poly", to_json(*d.char_poly)}}; break;
    case DescriptorKind::CoxeterClass: j["descriptor"] = {{"coxeter_class", true}}; break;
  }
  j["M_expected"] = d.M;
  if (t.family() == Family::E7) {
    const auto rep = coxeter_check_e7();
    for (const auto& r : rep.cases()) checks.push_back(check_json(r.id, r.pass, r.actual));
    if (!c.exhaustive) {
      j["M_found"] = nullptr;
      j["witness"] = nullptr;
      j["class_size"] = nullptr;
      j["checks"] = checks;
      return j;
    }
  }
  const SearchResult r = min_length_search(d, c.budget);
  j["M_found"] = r.M_found ? json(*r.M_found) : json(nullptr);
  j["witness"] = r.witness;
  j["class_size"] = r.size_found;
  j["visited"] = r.visited;
  checks.push_back(check_json("M", r.M_found && *r.M_found == d.M,
                              r.M_found ? std::to_string(*r.M_found) : std::string("none")));
  checks.push_back(check_json("all_elliptic", r.all_elliptic, ""));
  checks.push_back(check_json("visited_eq_order", group_data(t).order == r.visited, std::to_string(r.visited)));
  if (d.expected_size)
    checks.push_back(check_json("class_size", r.size_found == *d.expected_size, std::to_string(r.size_found)));
  j["checks"] = checks;
  return j;
}

json degree_json(const RunConfig& c) {
  if (!c.partition.empty()) {
    const Poly D = generic_degree_a(c.partition);
    const auto x = TypeAIndex::from_partition(c.partition);
    return {{"partition", c.partition},
            {"X", x.to_string()},
            {"D", to_json(D)},
            {"dim", D.eval(Scalar(1)).to_string()},
            {"gamma", val_at_minus_one(D)},
            {"a", D.low_degree()},
            {"alpha", alpha_a(x)}};
  }
  const WeylType t = selected_type(c);
  const SspDatum d = superspecial_datum(t);
  const auto rd = reconstruct_degree(d);
  return {{"type", t.name()},
          {"label", d.label},
          {"D", to_json(rd.D)},
          {"dim", rd.D.eval(Scalar(1)).to_string()},
          {"gamma", rd.gamma},
          {"a", d.a}};
}

VerificationReport verify_suite(const RunConfig& c) {
  if (c.suite == "thm13") return theorem_1_3_all(c.max_n);
  if (c.suite == "thm32") return theorem_3_2_suite();
  if (c.suite == "cells") return cells_suite();
  if (c.suite == "conj") return conjugacy_suite(c.budget);
  if (c.suite == "all") {
    VerificationReport r("all");
    r.merge(theorem_1_3_all(c.max_n));
    r.merge(theorem_3_2_suite());
    r.merge(cells_suite());
    r.merge(conjugacy_suite(c.budget));
    r.sort();
    return r;
  }
  throw UsageError("unknown suite '" + c.suite + "' (thm13, thm32, cells, conj, all)");
}

// Produces the report text and the exit code of the command.
std::string dispatch(const RunConfig& c, int& code) {
  code = kExitOk;
  switch (c.command) {
    case Command::Registry: return render_registry(c.format.value_or(Format::Json));
    case Command::Classify: {
      const json j = classify_json(selected_type(c));
      code = checks_pass(j) ? kExitOk : kExitFailure;
      return c.format.value_or(Format::Json) == Format::Tsv ? object_tsv(j) : j.dump(2) + "\n";
    }
    case Command::Table: {
      const std::string tsv = table_tsv(c.max_rank);
      if (c.format.value_or(Format::Tsv) == Format::Tsv) return tsv;
      json arr = json::array();
      std::istringstream in(tsv);
      std::string line;
      std::getline(in, line);
      while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, '\t')) f.push_back(cell);
        f.resize(4);
        arr.push_back({{"family", f[0]},
                       {"rank", std::stoul(f[1])},
                       {"superspecial", f[2] == "true"},
                       {"k", f[3].empty() ? json(nullptr) : json(std::stoul(f[3]))}});
      }
      return arr.dump(2) + "\n";
    }
    case Command::Symbols: return render_symbols(c, c.format.value_or(Format::Tsv), code);
    case Command::Cell: {
      const json j = cell_json(cell(selected_type(c), c.prime ? CellVariant::Zprime : CellVariant::Z));
      code = checks_pass(j) ? kExitOk : kExitFailure;
      return c.format.value_or(Format::Json) == Format::Tsv ? cell_tsv(j) : j.dump(2) + "\n";
    }
    case Command::Conj: {
      const json j = conj_json(c, selected_type(c));
      code = checks_pass(j) ? kExitOk : kExitFailure;
      return c.format.value_or(Format::Json) == Format::Tsv ? object_tsv(j) : j.dump(2) + "\n";
    }
    case Command::Verify: {
      const VerificationReport r = verify_suite(c);
      code = r.ok() ? kExitOk : kExitFailure;
      if (c.format.value_or(Format::Json) == Format::Tsv) {
        std::ostringstream os;
        write_tsv(r, os);
        return os.str();
      }
      return to_json(r).dump(2) + "\n";
    }
    case Command::Degree: {
      const json j = degree_json(c);
      return c.format.value_or(Format::Json) == Format::Tsv ? object_tsv(j) : j.dump(2) + "\n";
    }
  }
  return {};
}

struct CorruptionGuard {
  explicit CorruptionGuard(bool on) : prev(embedded_corruption()) { set_embedded_corruption(on || prev); }
  ~CorruptionGuard() { set_embedded_corruption(prev); }
  bool prev;
};

void print_failures(const std::string& text, std::ostream& err) {
  // verification reports: list the failing ids on the diagnostic stream
  try {
    const json j = json::parse(text);
    if (j.is_object() && j.contains("cases"))
      for (const auto& c : j["cases"])
        if (!c["pass"].get<bool>() && !c["advisory"].get<bool>())
          err << "FAIL " << c["id"].get<std::string>() << ": expected " << c["expected"].get<std::string>()
              << ", got " << c["actual"].get<std::string>() << '\n';
    if (j.is_object() && j.contains("checks"))
      for (const auto& c : j["checks"])
        if (!c["pass"].get<bool>()) err << "FAIL " << c["name"].get<std::string>() << ": " << tsv_cell(c["detail"]) << '\n';
  } catch (const json::exception&) {
  }
}

}  // namespace

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path + ": " + ec.message());
  }
}

json classify_json(const WeylType& t) {
  const GroupData g = group_data(t);
  const auto ss = is_superspecial(t);
  json j{{"type", t.family_name()},
         {"rank", t.subscript()},
         {"superspecial", ss.superspecial},
         {"k", ss.k ? json(*ss.k) : json(nullptr)},
         {"a", nullptr},
         {"c", nullptr},
         {"P_factors", nullptr},
         {"dim", nullptr},
         {"gamma", nullptr},
         {"label", nullptr},
         {"checks", json::array()}};
  if (!ss.superspecial) return j;
  const SspDatum d = superspecial_datum(t);
  j["a"] = d.a;
  j["c"] = to_json(d.c);
  j["P_factors"] = factors_json(d.P);
  j["dim"] = d.dim.get_str();
  j["label"] = d.label;
  if (d.b) j["b"] = *d.b;
  auto& checks = j["checks"];
  const Poly P = d.P.expand();
  checks.push_back(check_json("deg_P_eq_2a_plus_rank", P.degree() == static_cast<int>(2 * d.a + g.simple_reflection_count),
                              std::to_string(P.degree())));
  checks.push_back(check_json("P_nonnegative", std::all_of(P.coeffs().begin(), P.coeffs().end(),
                                                           [](const Scalar& s) { return s.sign() >= 0; }),
                              ""));
  try {
    const auto rd = reconstruct_degree(d);
    j["gamma"] = rd.gamma;
    checks.push_back(check_json("divides", true, ""));
    checks.push_back(check_json("dim_eq_D1", rd.D.eval(Scalar(1)) == Scalar::integer(d.dim), rd.D.eval(Scalar(1)).to_string()));
    checks.push_back(check_json("gamma_eq_r", rd.gamma == g.op_orbit_count, std::to_string(rd.gamma)));
    if (!t.crystallographic())
      checks.push_back(check_json("gamma_eq_card_I_advisory", true,
                                  rd.gamma == g.simple_reflection_count
                                      ? "gamma = #I"
                                      : "gamma = " + std::to_string(rd.gamma) + " differs from #I = " +
                                            std::to_string(g.simple_reflection_count)));
  } catch (const Error& e) {
    checks.push_back(check_json("divides", false, e.what()));
  }
  if (t.crystallographic()) {
    try {
      const FactoredPoly f = shape_factorize(P, d.c);
      checks.push_back(check_json("shape", f.expand() == P, f.to_string()));
    } catch (const Error& e) {
      checks.push_back(check_json("shape", false, e.what()));
    }
  }
  if (t.family() == Family::H4) {
    const Scalar base = Scalar(13) - Scalar(8) * Scalar::golden_ratio();
    checks.push_back(check_json("c_times_13_minus_8lambda", d.c * base == Scalar(120), (d.c * base).to_string()));
  }
  if (t.family() == Family::I2) {
    const Scalar v = d.c * (Scalar(2) - Scalar::cyclotomic_generator(t.param()));
    checks.push_back(check_json("c_times_2_minus_theta", v == Scalar(static_cast<long>(t.param())), v.to_string()));
  }
  return j;
}

std::string table_tsv(unsigned max_rank) {
  std::ostringstream os;
  os << "family\trank\tsuperspecial\tk\n";
  // A(n-1) with n = (k^2+k)/2, listed by the subscript n - 1
  for (unsigned k = 1; k * (k + 1) / 2 - 1 <= max_rank; ++k) os << "A\t" << k * (k + 1) / 2 - 1 << "\ttrue\t" << k << '\n';
  for (unsigned k = 1; k * k + k <= max_rank; ++k) os << "B\t" << k * k + k << "\ttrue\t" << k << '\n';
  for (unsigned k = 2; k * k <= max_rank; ++k) os << "D\t" << k * k << "\ttrue\t" << k << '\n';
  for (const char* e : {"E6", "E7", "E8", "F4", "G2"}) {
    const WeylType t = WeylType::parse(e);
    if (t.rank() <= max_rank) os << e << '\t' << t.rank() << "\ttrue\t\n";
  }
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CorruptionGuard guard(config.corrupt_embedded);
  std::string text;
  int code = kExitOk;
  try {
    text = dispatch(config, code);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage(e.code()) ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (code != kExitOk) print_failures(text, err);
  if (config.output) {
    try {
      atomic_write(*config.output, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  } else {
    out << text;
    out.flush();
  }
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  if (const char* b = std::getenv("SSPKIT_BUDGET")) {
    try {
      c.budget = std::stoul(b);
    } catch (const std::exception&) {
      err << "usage error: SSPKIT_BUDGET must be a number\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Superspecial representations of Weyl and Coxeter groups", "sspkit"};
  app.require_subcommand(1);
  std::string format;
  std::optional<unsigned long> budget;

  auto add_type = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--type,-t", c.type, "A, B, D, E6, E7, E8, F4, G2, H3, H4, I2 (or B6, I2(8))");
    if (required) o->required();
    s->add_option("--rank,-n", c.rank, "Cartan subscript; p for I2");
  };
  auto add_io = [&](CLI::App* s) {
    s->add_option("--format,-f", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    s->add_option("--output,-o", c.output, "write the report here instead of stdout");
  };

  auto* registry = app.add_subcommand("registry", "exponents, orders and opposition orbits");
  add_io(registry);
  auto* classify = app.add_subcommand("classify", "superspecial datum for one type");
  add_type(classify, true);
  add_io(classify);
  auto* table = app.add_subcommand("table", "every superspecial irreducible type up to a rank");
  table->add_option("--max-rank", c.max_rank, "largest rank listed")->check(CLI::Range(0u, 100000u));
  add_io(table);
  auto* symbols = app.add_subcommand("symbols", "index sets with rank and alpha");
  add_type(symbols, true);
  symbols->add_flag("--full", c.full, "one symbol per shift class instead of the 0-not-in-Y set");
  add_io(symbols);
  auto* cellc = app.add_subcommand("cell", "constructible representation Z_W or Z'_W");
  add_type(cellc, true);
  cellc->add_flag("--prime", c.prime, "Z'_W");
  add_io(cellc);
  auto* conj = app.add_subcommand("conj", "minimal length search for the superspecial class");
  add_type(conj, true);
  conj->add_option("--budget", budget, "largest group order to enumerate");
  conj->add_flag("--exhaustive", c.exhaustive, "also enumerate W(E7)");
  add_io(conj);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", c.suite, "thm13, thm32, cells, conj or all")
      ->check(CLI::IsMember({"thm13", "thm32", "cells", "conj", "all"}));
  verify->add_option("--max-n", c.max_n, "largest classical n for thm13")->check(CLI::Range(1u, 40u));
  verify->add_option("--budget", budget, "largest group order to enumerate");
  add_io(verify);
  auto* degree = app.add_subcommand("degree", "generic degree D(u) of the superspecial representation");
  add_type(degree, false);
  degree->add_option("--partition", c.partition, "type A: parts of a partition, q-hook formula")->delimiter(',');
  add_io(degree);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (budget) c.budget = *budget;
  if (!format.empty()) c.format = format == "tsv" ? Format::Tsv : Format::Json;
  if (*registry) c.command = Command::Registry;
  if (*classify) c.command = Command::Classify;
  if (*table) c.command = Command::Table;
  if (*symbols) c.command = Command::Symbols;
  if (*cellc) c.command = Command::Cell;
  if (*conj) c.command = Command::Conj;
  if (*verify) c.command = Command::Verify;
  if (*degree) {
    c.command = Command::Degree;
    if (c.type.empty() && c.partition.empty()) {
      err << "usage error: degree needs --type or --partition\n";
      return kExitUsage;
    }
  }
  return run(c, out, err);
}

}  // namespace ssp
