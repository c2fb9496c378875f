#include "sspkit/embedded_data.hpp"

#include <atomic>

namespace ssp {

namespace {

std::atomic<bool> g_corrupt{false};

FactoredPoly shape(std::vector<ShapeFactor> f) { return FactoredPoly(Scalar(1), std::move(f)); }

// golden ratio and its conjugate (sqrt5 - 1)/2 = lambda - 1
Scalar lambda() { return Scalar::golden_ratio(); }

EmbeddedSsp h4() {
  const Scalar lam = lambda();
  // c = 120/(13 - 8 lambda)
  const Scalar c = Scalar(120) / (Scalar(13) - Scalar(8) * lam);
  const Poly q1 = Poly::constant(Scalar(1)) + Poly::monomial(lam, 1) + Poly::monomial(Scalar(1), 2);
  const Poly q2 = Poly::constant(Scalar(1)) + Poly::monomial(lam - Scalar(1), 1) + Poly::monomial(Scalar(1), 2);
  FactoredPoly P(Scalar(1), {{1, 2, 4}, {1, 3, 2}}, {{q1, 2}, {q2, 2}});
  return {WeylType::H4(), "24_6", 24, 6, std::nullopt, c, P};
}

EmbeddedSsp i2(unsigned p) {
  const Scalar theta = Scalar::cyclotomic_generator(p);
  // c = p/((1 - xi)(1 - xi^-1)) = p/(2 - theta)
  const Scalar c = Scalar(static_cast<long>(p)) / (Scalar(2) - theta);
  const Poly q = Poly::constant(Scalar(1)) + Poly::monomial(theta, 1) + Poly::monomial(Scalar(1), 2);
  FactoredPoly P(Scalar(1), {{1, 2, 2}}, {{q, 1}});
  return {WeylType::I2(p), "2_1", 2, 1, std::nullopt, c, P};
}

}  // namespace

std::optional<EmbeddedSsp> embedded_ssp(const WeylType& t) {
  switch (t.family()) {
    case Family::E6:
      return EmbeddedSsp{t, "80_7", 80, 7, 7, Scalar(6), shape({{1, 2, 3}, {2, 2, 2}, {3, 2, 3}, {1, 3, 2}})};
    case Family::E7:
      return EmbeddedSsp{t, "512_11", 512, 11, 11, Scalar(2),
                         shape({{1, 2, 2}, {3, 2, 2}, {5, 2, 1}, {7, 2, 1}, {9, 2, 1}})};
    case Family::E8:
      return EmbeddedSsp{t, "4480_16", 4480, 16, 16, Scalar(120),
                         shape({{1, 2, 4}, {2, 2, 4}, {3, 2, 4}, {1, 3, 4}, {1, 5, 2}})};
    case Family::F4:
      return EmbeddedSsp{t, "12_4", 12, 4, 4, Scalar(24), shape({{1, 2, 4}, {2, 2, 2}, {1, 3, 2}})};
    case Family::G2:
      return EmbeddedSsp{t, "2_1", 2, 1, 1, Scalar(6), shape({{1, 2, 2}, {1, 3, 1}})};
    case Family::H3:
      return EmbeddedSsp{t, "4_3", 4, 3, std::nullopt, Scalar(2), shape({{1, 2, 1}, {3, 2, 1}, {5, 2, 1}})};
    case Family::H4: return h4();
    case Family::I2: return i2(t.param());
    default: return std::nullopt;
  }
}

std::optional<std::vector<EmbeddedComponent>> embedded_cell(const WeylType& t, CellVariant v) {
  const bool prime = v == CellVariant::Zprime;
  switch (t.family()) {
    case Family::E6: {
      if (prime) return std::nullopt;
      std::vector<EmbeddedComponent> cell{{"80_7", 6, 7}, {"60_8", 2, 8}, {"10_9", 3, 9}};
      if (g_corrupt.load()) cell[1].c = 3;
      return cell;
    }
    case Family::E7:
      if (prime) return std::nullopt;
      return std::vector<EmbeddedComponent>{{"512_11", 2, 11}, {"512_12", 2, 12}};
    case Family::E8:
      if (prime) return std::nullopt;
      return std::vector<EmbeddedComponent>{{"4480_16", 120, 16}, {"3150_18", 6, 18}, {"4200_18", 8, 18},
                                            {"420_20", 5, 20},     {"7168_17", 12, 17}, {"1344_19", 4, 19},
                                            {"2016_19", 6, 19}};
    case Family::F4:
      return std::vector<EmbeddedComponent>{
          {"12_4", 24, 4}, {"6_6", 3, 6}, {"9_6", 8, 6, prime}, {"4_7", 4, 7, prime}, {"16_5", 4, 5}};
    case Family::G2:
      return std::vector<EmbeddedComponent>{{"2_1", 6, 1}, {"2_2", 2, 2}, {"1_3", 3, 3, prime}};
    default: return std::nullopt;
  }
}

std::optional<EmbeddedClass> embedded_class(const WeylType& t) {
  const Poly q6 = Poly{1, -1, 1};  // u^2 - u + 1
  const Poly q4 = Poly{1, 0, 1};   // u^2 + 1
  switch (t.family()) {
    case Family::E8: return EmbeddedClass{t, power(q6, 4), false, 40, 4480};
    case Family::E7: return EmbeddedClass{t, std::nullopt, true, 7, std::nullopt};
    case Family::F4: return EmbeddedClass{t, power(q4, 2), false, 12, 12};
    case Family::G2: return EmbeddedClass{t, Poly{1, 1, 1}, false, 4, 2};
    default: return std::nullopt;
  }
}

std::vector<GammaException> gamma_exceptions(const WeylType& t) {
  switch (t.family()) {
    case Family::E8: return {{"7168_w", false}, {"2688_y", false}};
    case Family::F4: return {{"4_1", false}, {"16_1", false}};
    default: return {};
  }
}

void set_embedded_corruption(bool on) { g_corrupt.store(on); }
bool embedded_corruption() { return g_corrupt.load(); }

}  // namespace ssp
