#include "sspkit/conjugacy.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <unordered_map>

#include "sspkit/classifier.hpp"
#include "sspkit/embedded_data.hpp"
#include "sspkit/errors.hpp"

namespace ssp {

using Matrix = std::vector<std::vector<long>>;

std::size_t PackedHash::operator()(const PackedElement& e) const noexcept {
  // FNV-1a over the bytes
  std::size_t h = 1469598103934665603ull;
  for (auto b : e) {
    h ^= static_cast<std::uint8_t>(b);
    h *= 1099511628211ull;
  }
  return h;
}

SignedPermutation::SignedPermutation(std::vector<int> window) : w_(std::move(window)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    const auto a = static_cast<std::size_t>(std::abs(v));
    if (a == 0 || a > w_.size() || seen[a]) throw Error(ErrorCode::ParseError, "not a signed permutation");
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(unsigned n) {
  std::vector<int> w(n);
  for (unsigned i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
  return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const { return i > 0 ? w_[i - 1] : -w_[-i - 1]; }

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  std::vector<int> r(o.w_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)(o.w_[i]);
  return SignedPermutation(std::move(r));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> r(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) {
    const int v = w_[i];
    r[std::abs(v) - 1] = v > 0 ? static_cast<int>(i + 1) : -static_cast<int>(i + 1);
  }
  return SignedPermutation(std::move(r));
}

unsigned SignedPermutation::sign_changes() const {
  return static_cast<unsigned>(std::count_if(w_.begin(), w_.end(), [](int v) { return v < 0; }));
}

namespace {

template <class Window>
void cycle_type(const Window& w, unsigned n, std::vector<unsigned>& pos, std::vector<unsigned>& neg) {
  std::vector<bool> seen(n, false);
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    int sign = 1;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      const int v = w[j];
      if (v < 0) sign = -sign;
      j = static_cast<unsigned>(std::abs(v)) - 1;
      ++len;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
}

std::vector<long> charpoly_coeffs(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<long> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<long>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_(k-1) + c_(n-k+1) I
    Matrix next(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s + (i == j ? c[n - k + 1] : 0);
      }
    m = std::move(next);
    long tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::vector<long> cycles_to_coeffs(const std::vector<unsigned>& pos, const std::vector<unsigned>& neg) {
  std::vector<long> acc{1};
  auto mul = [&](unsigned l, long c0) {
    std::vector<long> r(acc.size() + l, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      r[i] += c0 * acc[i];
      r[i + l] += acc[i];
    }
    acc = std::move(r);
  };
  for (unsigned l : pos) mul(l, -1);
  for (unsigned l : neg) mul(l, 1);
  return acc;
}

Poly poly_of(const std::vector<long>& c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (a[i][l])
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

Matrix identity_matrix(std::size_t n) {
  Matrix r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Matrix cartan_from_edges(unsigned n, const std::vector<std::tuple<unsigned, unsigned, long, long>>& edges) {
  Matrix a = identity_matrix(n);
  for (auto& row : a)
    for (auto& x : row) x *= 2;
  for (auto [i, j, aij, aji] : edges) {
    a[i][j] = aij;
    a[j][i] = aji;
  }
  return a;
}

}  // namespace

std::vector<unsigned> SignedPermutation::positive_cycles() const {
  std::vector<unsigned> pos, neg;
  cycle_type(w_, size(), pos, neg);
  return pos;
}

std::vector<unsigned> SignedPermutation::negative_cycles() const {
  std::vector<unsigned> pos, neg;
  cycle_type(w_, size(), pos, neg);
  return neg;
}

std::vector<std::vector<long>> SignedPermutation::matrix() const {
  Matrix m(size(), std::vector<long>(size(), 0));
  for (std::size_t j = 0; j < w_.size(); ++j) m[std::abs(w_[j]) - 1][j] = w_[j] > 0 ? 1 : -1;
  return m;
}

Poly char_poly_reflection(const SignedPermutation& w) {
  return poly_of(cycles_to_coeffs(w.positive_cycles(), w.negative_cycles()));
}

Poly char_poly_matrix(const std::vector<std::vector<long>>& m) { return poly_of(charpoly_coeffs(m)); }

bool is_elliptic(const Poly& char_poly) { return !char_poly.eval(Scalar(1)).is_zero(); }

bool is_elliptic(const SignedPermutation& w) { return w.positive_cycles().empty(); }

std::vector<std::vector<long>> cartan_matrix(const WeylType& t) {
  switch (t.family()) {
    case Family::G2: return {{2, -1}, {-3, 2}};
    case Family::F4: return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
      const unsigned n = t.rank();
      std::vector<std::tuple<unsigned, unsigned, long, long>> e{{0, 2, -1, -1}, {1, 3, -1, -1}, {2, 3, -1, -1}};
      for (unsigned i = 3; i + 1 < n; ++i) e.push_back({i, i + 1, -1, -1});
      return cartan_from_edges(n, e);
    }
    case Family::B: {
      const unsigned n = t.rank();
      std::vector<std::tuple<unsigned, unsigned, long, long>> e;
      for (unsigned i = 0; i + 2 < n; ++i) e.push_back({i, i + 1, -1, -1});
      e.push_back({n - 2, n - 1, -1, -2});
      return cartan_from_edges(n, e);
    }
    case Family::D: {
      const unsigned n = t.rank();
      std::vector<std::tuple<unsigned, unsigned, long, long>> e;
      for (unsigned i = 0; i + 2 < n; ++i) e.push_back({i, i + 1, -1, -1});
      e.push_back({n - 3, n - 1, -1, -1});
      return cartan_from_edges(n, e);
    }
    default: throw Error(ErrorCode::UnsupportedType, "no Cartan matrix for " + t.name());
  }
}

std::vector<std::vector<std::vector<long>>> simple_reflection_matrices(const WeylType& t) {
  const Matrix a = cartan_matrix(t);
  const std::size_t n = a.size();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix s = identity_matrix(n);
    for (std::size_t j = 0; j < n; ++j) s[i][j] -= a[i][j];
    gens.push_back(std::move(s));
  }
  return gens;
}

std::vector<std::vector<long>> positive_roots(const WeylType& t) {
  const auto gens = simple_reflection_matrices(t);
  const std::size_t n = gens.size();
  auto apply = [&](const Matrix& m, const std::vector<long>& v) {
    std::vector<long> r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
  };
  std::vector<std::vector<long>> roots;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    roots.push_back(e);
  }
  for (std::size_t done = 0; done < roots.size(); ++done)
    for (const auto& s : gens) {
      auto r = apply(s, roots[done]);
      if (std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; }) &&
          std::find(roots.begin(), roots.end(), r) == roots.end())
        roots.push_back(std::move(r));
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

unsigned root_length(const std::vector<std::vector<long>>& m, const std::vector<std::vector<long>>& roots) {
  unsigned neg = 0;
  const std::size_t n = m.size();
  for (const auto& r : roots) {
    bool negative = false;
    for (std::size_t i = 0; i < n && !negative; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * r[j];
      if (s < 0) negative = true;
    }
    neg += negative;
  }
  return neg;
}

ClassDesc ssp_class(const WeylType& t) {
  if (!t.crystallographic()) throw Error(ErrorCode::UnsupportedType, "no class data for " + t.name());
  const auto ss = is_superspecial(t);
  if (!ss.superspecial) throw Error(ErrorCode::NotSuperspecial, t.name() + " is not superspecial");
  switch (t.family()) {
    case Family::A:
    case Family::E6:
      throw Error(ErrorCode::OppositionNontrivial, t.name() + " has nontrivial opposition (twisted classes)");
    case Family::B: {
      const unsigned k = *ss.k;
      ClassDesc d{t, DescriptorKind::NegativeCycles, {}, std::nullopt, k * (k + 1) * (2 * k + 1) / 3, std::nullopt};
      for (unsigned j = 1; j <= k; ++j) d.negative_cycles.push_back(2 * j);
      return d;
    }
    case Family::D: {
      const unsigned k = *ss.k;
      if (k % 2)
        throw Error(ErrorCode::OppositionNontrivial, t.name() + " has nontrivial opposition (twisted classes)");
      ClassDesc d{t, DescriptorKind::NegativeCycles, {}, std::nullopt, 2 * k * (k * k - 1) / 3, std::nullopt};
      for (unsigned j = 1; j <= k; ++j) d.negative_cycles.push_back(2 * j - 1);
      return d;
    }
    default: {
      auto e = embedded_class(t);
      if (!e) throw Error(ErrorCode::UnsupportedType, "no class data for " + t.name());
      ClassDesc d{t, e->coxeter_class ? DescriptorKind::CoxeterClass : DescriptorKind::CharPoly, {}, e->char_poly,
                  e->M, std::nullopt};
      if (e->size) d.expected_size = *e->size;
      return d;
    }
  }
}

namespace {

class Model {
 public:
  virtual ~Model() = default;
  virtual unsigned generators() const = 0;
  virtual PackedElement identity() const = 0;
  virtual PackedElement right_mul(const PackedElement& e, unsigned g) const = 0;
  virtual bool matches(const PackedElement& e) const = 0;
  virtual bool elliptic(const PackedElement& e) const = 0;
};

// Window model; generator 0 is s0 (B: negate w(1); D: w(1), w(2) -> -w(2), -w(1)),
// generator i >= 1 swaps positions i and i+1.
class SignedModel final : public Model {
 public:
  SignedModel(unsigned n, bool type_d, std::vector<unsigned> target_neg)
      : n_(n), d_(type_d), target_(std::move(target_neg)) {
    if (n > 64) throw Error(ErrorCode::BudgetExceeded, "window too long");
  }
  unsigned generators() const override { return n_; }
  PackedElement identity() const override {
    PackedElement e{};
    for (unsigned i = 0; i < n_; ++i) e[i] = static_cast<std::int8_t>(i + 1);
    return e;
  }
  PackedElement right_mul(const PackedElement& e, unsigned g) const override {
    PackedElement r = e;
    if (g == 0) {
      if (d_) {
        r[0] = static_cast<std::int8_t>(-e[1]);
        r[1] = static_cast<std::int8_t>(-e[0]);
      } else {
        r[0] = static_cast<std::int8_t>(-e[0]);
      }
    } else {
      std::swap(r[g - 1], r[g]);
    }
    return r;
  }
  bool matches(const PackedElement& e) const override {
    std::vector<unsigned> pos, neg;
    cycle_type(e, n_, pos, neg);
    return pos.empty() && neg == target_;
  }
  bool elliptic(const PackedElement& e) const override {
    std::vector<unsigned> pos, neg;
    cycle_type(e, n_, pos, neg);
    return pos.empty();
  }

 private:
  unsigned n_;
  bool d_;
  std::vector<unsigned> target_;
};

class MatrixModel final : public Model {
 public:
  MatrixModel(std::vector<Matrix> gens, std::vector<long> target)
      : gens_(std::move(gens)), n_(gens_.size()), target_(std::move(target)) {
    if (n_ > 8) throw Error(ErrorCode::BudgetExceeded, "matrix model limited to rank 8");
  }
  unsigned generators() const override { return static_cast<unsigned>(n_); }
  PackedElement identity() const override { return pack(identity_matrix(n_)); }
  PackedElement right_mul(const PackedElement& e, unsigned g) const override {
    return pack(matmul(unpack(e), gens_[g]));
  }
  bool matches(const PackedElement& e) const override { return charpoly_coeffs(unpack(e)) == target_; }
  bool elliptic(const PackedElement& e) const override {
    const auto c = charpoly_coeffs(unpack(e));
    long at_one = 0;
    for (long x : c) at_one += x;
    return at_one != 0;
  }

 private:
  PackedElement pack(const Matrix& m) const {
    PackedElement e{};
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (m[i][j] > 127 || m[i][j] < -128) throw Error(ErrorCode::BudgetExceeded, "matrix entry out of range");
        e[i * n_ + j] = static_cast<std::int8_t>(m[i][j]);
      }
    return e;
  }
  Matrix unpack(const PackedElement& e) const {
    Matrix m(n_, std::vector<long>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m[i][j] = e[i * n_ + j];
    return m;
  }
  std::vector<Matrix> gens_;
  std::size_t n_;
  std::vector<long> target_;
};

std::vector<long> integer_coeffs_of(const Poly& p) {
  std::vector<long> c;
  for (const auto& s : p.coeffs()) c.push_back(s.to_integer().get_si());
  return c;
}

Matrix coxeter_element(const WeylType& t) {
  const auto gens = simple_reflection_matrices(t);
  Matrix c = identity_matrix(gens.size());
  for (const auto& s : gens) c = matmul(c, s);
  return c;
}

std::unique_ptr<Model> make_model(const ClassDesc& desc) {
  const WeylType& t = desc.type;
  switch (t.family()) {
    case Family::B:
    case Family::D:
      return std::make_unique<SignedModel>(t.rank(), t.family() == Family::D, desc.negative_cycles);
    case Family::G2:
    case Family::F4:
    case Family::E7:
    case Family::E8: {
      std::vector<long> target;
      if (desc.kind == DescriptorKind::CoxeterClass)
        target = charpoly_coeffs(coxeter_element(t));
      else
        target = integer_coeffs_of(*desc.char_poly);
      return std::make_unique<MatrixModel>(simple_reflection_matrices(t), target);
    }
    default: throw Error(ErrorCode::UnsupportedType, "no concrete model for " + t.name());
  }
}

struct Node {
  PackedElement e;
  std::uint32_t parent;
  std::uint8_t gen;
};

struct Candidate {
  PackedElement e;
  bool fresh = false;
  bool match = false;
  bool elliptic = true;
};

SearchResult bfs(const ClassDesc& desc, unsigned long budget, bool parallel) {
  const mpz_class order = group_data(desc.type).order;
  if (order > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "|W(" + desc.type.name() + ")| = " + order.get_str() + " exceeds budget " + std::to_string(budget));
  const auto model = make_model(desc);
  const unsigned G = model->generators();

  SearchResult res;
  std::vector<Node> nodes;
  std::unordered_map<PackedElement, std::uint32_t, PackedHash> index;
  nodes.reserve(order.get_ui());
  index.reserve(order.get_ui());
  nodes.push_back({model->identity(), UINT32_MAX, 0});
  index.emplace(nodes[0].e, 0);

  auto word_of = [&](std::uint32_t i) {
    std::vector<unsigned> w;
    while (nodes[i].parent != UINT32_MAX) {
      w.push_back(nodes[i].gen);
      i = nodes[i].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  auto record = [&](std::uint32_t idx, unsigned depth, bool elliptic) {
    ++res.size_found;
    if (!elliptic) res.all_elliptic = false;
    if (!res.M_found) {
      res.M_found = depth;
      res.witness = word_of(idx);
    }
    if (*res.M_found == depth) ++res.at_minimum;
  };
  if (model->matches(nodes[0].e)) record(0, 0, model->elliptic(nodes[0].e));

  std::vector<std::uint32_t> frontier{0};
  std::vector<Candidate> cand;
  for (unsigned depth = 1; !frontier.empty(); ++depth) {
    cand.assign(frontier.size() * G, Candidate{});
    const long total = static_cast<long>(cand.size());
    // lookups only; the index is not modified until the merge below
    auto expand = [&](long i) {
      Candidate& c = cand[i];
      c.e = model->right_mul(nodes[frontier[i / G]].e, static_cast<unsigned>(i % G));
      c.fresh = !index.contains(c.e);
      if (c.fresh) {
        c.match = model->matches(c.e);
        if (c.match) c.elliptic = model->elliptic(c.e);
      }
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (long i = 0; i < total; ++i) expand(i);
    } else {
      for (long i = 0; i < total; ++i) expand(i);
    }
    std::vector<std::uint32_t> next;
    for (long i = 0; i < total; ++i) {
      const Candidate& c = cand[i];
      if (!c.fresh) continue;
      const auto id = static_cast<std::uint32_t>(nodes.size());
      if (!index.emplace(c.e, id).second) continue;
      nodes.push_back({c.e, frontier[i / G], static_cast<std::uint8_t>(i % G)});
      next.push_back(id);
      if (c.match) record(id, depth, c.elliptic);
    }
    frontier = std::move(next);
  }
  res.visited = nodes.size();
  return res;
}

}  // namespace

SearchResult min_length_search(const ClassDesc& desc, unsigned long budget) { return bfs(desc, budget, true); }

SearchResult min_length_search_serial(const ClassDesc& desc, unsigned long budget) {
  return bfs(desc, budget, false);
}

SignedPermutation signed_permutation_from_word(const WeylType& t, const std::vector<unsigned>& word) {
  if (t.family() != Family::B && t.family() != Family::D)
    throw Error(ErrorCode::UnsupportedType, "signed permutation model needs B or D");
  SignedModel m(t.rank(), t.family() == Family::D, {});
  PackedElement e = m.identity();
  for (unsigned g : word) e = m.right_mul(e, g);
  return SignedPermutation(std::vector<int>(e.begin(), e.begin() + t.rank()));
}

VerificationReport coxeter_check_e7() {
  VerificationReport rep("conj");
  const WeylType t = WeylType::E7();
  const std::string pre = "conj/E7";
  const Matrix c = coxeter_element(t);
  const auto roots = positive_roots(t);
  rep.check(pre + "/positive_roots", "63", std::to_string(roots.size()));
  rep.check(pre + "/coxeter_length", "7", std::to_string(root_length(c, roots)), Provenance::Embedded);
  unsigned order = 0;
  Matrix p = c;
  for (unsigned k = 1; k <= 100; ++k) {
    if (p == identity_matrix(c.size())) {
      order = k;
      break;
    }
    p = matmul(p, c);
  }
  rep.check(pre + "/coxeter_order", "18", std::to_string(order), Provenance::Derived);
  const Poly cp = char_poly_matrix(c);
  rep.check(pre + "/coxeter_elliptic", is_elliptic(cp), cp.to_string(), Provenance::Derived);
  rep.check(pre + "/M", std::to_string(ssp_class(t).M), std::to_string(root_length(c, roots)), Provenance::Embedded);
  return rep;
}

VerificationReport e8_numeric_checks() {
  VerificationReport rep("conj");
  const std::string pre = "conj/E8";
  const ClassDesc d = ssp_class(WeylType::E8());
  const SspDatum e = superspecial_datum(WeylType::E8());
  rep.check(pre + "/M_eq_deg_P", std::to_string(d.M), std::to_string(e.P.degree()), Provenance::Embedded);
  rep.check(pre + "/size_eq_dim", e.dim.get_str(), std::to_string(d.expected_size.value_or(0)), Provenance::Embedded);
  rep.check(pre + "/char_poly_degree", "8", std::to_string(d.char_poly->degree()));
  rep.check(pre + "/char_poly_elliptic", is_elliptic(*d.char_poly));
  return rep;
}

VerificationReport conjugacy_suite(unsigned long budget) {
  VerificationReport rep("conj");
  for (auto t : {WeylType::B(2), WeylType::B(6), WeylType::D(4), WeylType::G2(), WeylType::F4()}) {
    const std::string pre = "conj/" + case_prefix(t);
    try {
      const ClassDesc d = ssp_class(t);
      const SearchResult r = min_length_search(d, budget);
      rep.check(pre + "/M", std::to_string(d.M), r.M_found ? std::to_string(*r.M_found) : "none",
                t.classical() ? Provenance::Computed : Provenance::Embedded);
      rep.check(pre + "/all_elliptic", r.all_elliptic, "", Provenance::Derived);
      rep.check(pre + "/visited_eq_order", group_data(t).order.get_str(), std::to_string(r.visited),
                Provenance::Derived);
      rep.check(pre + "/matched_at_minimum", r.at_minimum > 0, "", Provenance::Derived);
      if (d.expected_size)
        rep.check(pre + "/class_size", std::to_string(*d.expected_size), std::to_string(r.size_found),
                  Provenance::Embedded);
      if (!t.classical()) {
        const SspDatum e = superspecial_datum(t);
        rep.check(pre + "/M_eq_deg_P", std::to_string(d.M), std::to_string(e.P.degree()), Provenance::Embedded);
      }
    } catch (const std::exception& e) {
      rep.check(pre + "/error", false, e.what());
    }
  }
  rep.merge(coxeter_check_e7());
  rep.merge(e8_numeric_checks());
  rep.sort();
  return rep;
}

}  // namespace ssp
