#include "sspkit/cells.hpp"

#include <algorithm>
#include <set>

#include "sspkit/classifier.hpp"
#include "sspkit/errors.hpp"

namespace ssp {

namespace {

unsigned parity_of_y(const SymbolPair& s) {
  unsigned sum = 0;
  for (unsigned v : s.y()) sum += v;
  return sum % 2;
}

// Permutations of first, first+1, ..., first+2p-1 preserving each pair
// {first+2i, first+2i+1}; bit i of mask swaps pair i.
std::vector<unsigned> pair_permutation(unsigned first, unsigned pairs, unsigned mask) {
  std::vector<unsigned> sigma(2 * pairs);
  for (unsigned i = 0; i < pairs; ++i) {
    const bool swap = (mask >> i) & 1u;
    sigma[2 * i] = first + 2 * i + (swap ? 1 : 0);
    sigma[2 * i + 1] = first + 2 * i + (swap ? 0 : 1);
  }
  return sigma;
}

CellComponent classical_component(SymbolPair s, const mpz_class& c) {
  CellComponent comp;
  comp.label = s.to_string();
  comp.c = c;
  comp.b_parity = parity_of_y(s);
  comp.normal_form = s.normal_form();
  comp.index = std::move(s);
  return comp;
}

std::vector<CellComponent> b_cell(unsigned k, CellVariant v) {
  std::vector<CellComponent> out;
  const mpz_class c = mpz_class(1) << k;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<unsigned> x, y;
    if (v == CellVariant::Z) {
      // sigma on 1..2k: X = {0, s(2), ..., s(2k)}, Y = {s(1), ..., s(2k-1)}
      const auto s = pair_permutation(1, k, mask);  // s[j-1] = sigma(j)
      x.push_back(0);
      for (unsigned j = 2; j <= 2 * k; j += 2) x.push_back(s[j - 1]);
      for (unsigned j = 1; j < 2 * k; j += 2) y.push_back(s[j - 1]);
    } else {
      // sigma on 0..2k-1: X = {s(0), s(2), ..., s(2k-2), 2k}, Y = {s(1), ..., s(2k-1)}
      const auto s = pair_permutation(0, k, mask);  // s[j] = sigma(j)
      for (unsigned j = 0; j < 2 * k; j += 2) x.push_back(s[j]);
      x.push_back(2 * k);
      for (unsigned j = 1; j < 2 * k; j += 2) y.push_back(s[j]);
    }
    out.push_back(classical_component(SymbolPair(x, y), c));
  }
  if (k == 1) {
    out[0].label = "2_1";
    out[1].label = "1_2";
    out[1].twin = v == CellVariant::Zprime;
  }
  return out;
}

std::vector<CellComponent> d_cell(unsigned k) {
  std::vector<CellComponent> out;
  const mpz_class c = mpz_class(1) << (k - 1);
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    // sigma on 1..2k-2: X = {0, s(2), ..., s(2k-2)}, Y = {s(1), ..., s(2k-3), 2k-1}
    const auto s = pair_permutation(1, k - 1, mask);
    std::vector<unsigned> x{0}, y;
    for (unsigned j = 2; j <= 2 * k - 2; j += 2) x.push_back(s[j - 1]);
    for (unsigned j = 1; j <= 2 * k - 3; j += 2) y.push_back(s[j - 1]);
    y.push_back(2 * k - 1);
    out.push_back(classical_component(SymbolPair::unordered(x, y), c));
  }
  return out;
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string variant_name(CellVariant v) { return v == CellVariant::Z ? "Z" : "Zprime"; }

CellDatum cell(const WeylType& t, CellVariant v) {
  if (!t.crystallographic()) throw Error(ErrorCode::UnsupportedType, "no cell data for " + t.name());
  const auto ss = is_superspecial(t);
  if (!ss.superspecial) throw Error(ErrorCode::NotSuperspecial, t.name() + " is not superspecial");
  if (v == CellVariant::Zprime && t.simply_laced())
    throw Error(ErrorCode::VariantUnavailable, "Z' is only defined for non simply laced types");
  CellDatum d{t, v, {}};
  switch (t.family()) {
    case Family::A: {
      const SspDatum e = superspecial_datum(t);
      d.components.push_back({e.label, std::nullopt, 1, 0, false, true});
      break;
    }
    case Family::B: d.components = b_cell(*ss.k, v); break;
    case Family::D: d.components = d_cell(*ss.k); break;
    default: {
      auto list = embedded_cell(t, v);
      if (!list) throw Error(ErrorCode::UnsupportedType, "no cell data for " + t.name());
      for (const auto& e : *list) d.components.push_back({e.label, std::nullopt, e.c, e.b % 2, e.twin, true});
    }
  }
  return d;
}

IdentitySums identity_sums(const CellDatum& d) {
  IdentitySums s{0, 0};
  for (const auto& c : d.components) {
    const mpq_class inv(mpz_class(1), c.c);
    s.inverse_sum += inv;
    s.signed_sum += c.b_parity ? mpq_class(-inv) : inv;
  }
  s.inverse_sum.canonicalize();
  s.signed_sum.canonicalize();
  return s;
}

VerificationReport verify_identities(const CellDatum& d) {
  VerificationReport rep("cells");
  const std::string pre = "cells/" + case_prefix(d.type) + "/" + variant_name(d.variant);
  const auto sums = identity_sums(d);
  const Provenance prov = d.type.classical() ? Provenance::Computed : Provenance::Embedded;
  rep.check(pre + "/a_inverse_sum", "1", q_str(sums.inverse_sum), prov);
  if (d.type.family() != Family::A) rep.check(pre + "/a1_signed_sum", "0", q_str(sums.signed_sum), prov);

  std::set<std::tuple<std::string, std::string, bool>> seen;
  for (const auto& c : d.components)
    seen.insert({c.label, c.index ? c.index->to_string() : "", c.twin});
  rep.check(pre + "/distinct", std::to_string(d.components.size()), std::to_string(seen.size()));
  rep.check(pre + "/c_positive",
            std::all_of(d.components.begin(), d.components.end(), [](const auto& c) { return c.c > 0; }));

  // E_W itself occurs exactly once
  const SspDatum e = superspecial_datum(d.type);
  const auto special = std::count_if(d.components.begin(), d.components.end(), [&](const CellComponent& c) {
    return c.index ? c.index->to_string() == e.label : c.label == e.label;
  });
  rep.check(pre + "/special_once", "1", std::to_string(special));
  const auto c_special = std::find_if(d.components.begin(), d.components.end(), [&](const CellComponent& c) {
    return c.index ? c.index->to_string() == e.label : c.label == e.label;
  });
  if (c_special != d.components.end() && e.c.is_integer())
    rep.check(pre + "/special_c", e.c.to_integer().get_str(), c_special->c.get_str(), prov);

  if (d.type.family() == Family::B || d.type.family() == Family::D) {
    const unsigned k = *is_superspecial(d.type).k;
    const bool b = d.type.family() == Family::B;
    const unsigned n = d.type.param();
    rep.check(pre + "/count", std::to_string(1u << (b ? k : k - 1)), std::to_string(d.components.size()));
    const auto full = b ? enumerate_bd_reduced(n, 1) : enumerate_bd(n, 0);
    std::size_t in_rank = 0, in_enum = 0, const_c = 0;
    const mpz_class c0 = mpz_class(1) << (b ? k : k - 1);
    for (const auto& c : d.components) {
      if (rank_bd(*c.index) == static_cast<long>(n)) ++in_rank;
      if (std::binary_search(full.begin(), full.end(), *c.index)) ++in_enum;
      if (c.c == c0) ++const_c;
    }
    const auto total = std::to_string(d.components.size());
    rep.check(pre + "/rank", total, std::to_string(in_rank));
    rep.check(pre + "/in_enumeration", total, std::to_string(in_enum), Provenance::Derived);
    rep.check(pre + "/constant_c", total, std::to_string(const_c));
  }
  rep.sort();
  return rep;
}

VerificationReport cells_suite() {
  struct Job {
    WeylType t;
    CellVariant v;
  };
  std::vector<Job> jobs;
  for (auto t : {WeylType::B(2), WeylType::G2(), WeylType::F4(), WeylType::B(6), WeylType::B(12)}) {
    jobs.push_back({t, CellVariant::Z});
    jobs.push_back({t, CellVariant::Zprime});
  }
  for (auto t : {WeylType::E6(), WeylType::E7(), WeylType::E8(), WeylType::A(1), WeylType::A(3), WeylType::A(6),
                 WeylType::A(10), WeylType::D(4), WeylType::D(9), WeylType::D(16)})
    jobs.push_back({t, CellVariant::Z});

  std::vector<VerificationReport> parts(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < static_cast<int>(jobs.size()); ++i) {
    try {
      parts[i] = verify_identities(cell(jobs[i].t, jobs[i].v));
    } catch (const std::exception& e) {
      parts[i].check("cells/" + case_prefix(jobs[i].t) + "/" + variant_name(jobs[i].v) + "/error", false, e.what());
    }
  }
  VerificationReport rep("cells");
  for (const auto& p : parts) rep.merge(p);

  // Z and Z' agree in their c and b multisets
  for (auto t : {WeylType::B(2), WeylType::G2(), WeylType::F4(), WeylType::B(6), WeylType::B(12)}) {
    const std::string pre = "cells/" + case_prefix(t) + "/Z_vs_Zprime";
    try {
      auto key = [](const CellDatum& d) {
        std::vector<std::pair<mpz_class, unsigned>> v;
        for (const auto& c : d.components) v.push_back({c.c, c.b_parity});
        std::sort(v.begin(), v.end());
        return v;
      };
      rep.check(pre, key(cell(t, CellVariant::Z)) == key(cell(t, CellVariant::Zprime)));
    } catch (const std::exception& e) {
      rep.check(pre, false, e.what());
    }
  }
  rep.sort();
  return rep;
}

}  // namespace ssp
