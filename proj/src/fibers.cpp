#include "gaunt/fibers.hpp"

namespace gaunt {

std::optional<std::size_t> FiberPoset::class_of(const FiberObject& o) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == o) return poset.class_of()[i];
  return std::nullopt;
}

std::string format_fiber_object(const ComplexMap& f, const FiberObject& o) {
  return "(" + f.source().generator_name(0, o.object) + "," + cell_label(f.target(), o.path) + ")";
}

FiberPoset oriented_right_fiber_pi0(MapAnalysis& analysis, std::size_t y,
                                    FiberConvention convention) {
  const ComplexMap& f = analysis.map();
  const Complex& src = f.source();
  const Complex& tgt = f.target();
  if (y >= tgt.count(0)) throw InvalidObject("no object " + std::to_string(y) + " in " + tgt.name());
  auto& source = analysis.source_solver();
  auto& target = analysis.target_solver();
  FiberPoset out;
  const Chain point = tgt.generator(0, y);
  for (std::size_t c = 0; c < src.count(0); ++c)
    for (const auto& sigma : target.solve(1, point - f.image(0, c))) out.objects.push_back({c, sigma});
  const std::size_t n = out.objects.size();
  std::vector<std::string> labels;
  for (const auto& o : out.objects) labels.push_back(format_fiber_object(f, o));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [c, sigma] = out.objects[i];
      const auto& [c2, sigma2] = out.objects[j];
      for (const auto& g : source.solve(1, src.generator(0, c2) - src.generator(0, c))) {
        Chain composite = sigma2 + f.apply(g);
        Chain d = convention == FiberConvention::Oplax ? composite - sigma : sigma - composite;
        if (target.solvable(2, d)) {
          leq[i][j] = true;
          break;
        }
      }
    }
  out.poset = Poset::from_matrix(std::move(labels), std::move(leq));
  return out;
}

FiberPoset oriented_right_fiber_pi0(MapAnalysis& analysis, std::string_view y,
                                    FiberConvention convention) {
  auto g = analysis.map().target().find(y);
  if (!g || g->degree != 0) throw InvalidObject("'" + std::string(y) + "' is not an object");
  return oriented_right_fiber_pi0(analysis, g->index, convention);
}

bool LesReport::ok(int item) const {
  for (const auto& e : entries)
    if (e.item == item && !e.holds()) return false;
  return true;
}

bool LesReport::ok() const { return ok(1) && ok(2) && ok(3); }

LesReport les_exactness_check(MapAnalysis& analysis, const OrientedBasePoint& z,
                              FiberConvention convention) {
  const ComplexMap& f = analysis.map();
  const Complex& src = f.source();
  check_table(src, z, false);
  if (z.dimension() < 0 || z.dimension() > 1)
    throw InvalidBasepoint("exactness is checked at basepoints of dimension 0 or 1");
  LesReport report;
  report.basepoint = format_table(src, z);
  auto& source = analysis.source_solver();
  auto& target = analysis.target_solver();
  const std::size_t x0 = z.minus(0).support().at(0);
  const std::size_t y0 = z.plus(0).support().at(0);
  const std::size_t fy0 = f.image(0, y0).support().at(0);

  auto fiber = oriented_right_fiber_pi0(analysis, fy0, convention);
  auto pc = pi0(source);
  auto pd = pi0(target);

  // (1) T ∈ π₀C is hit from π₀ℱ iff f(T) ≤ f(Y₀) in π₀D.
  for (std::size_t t = 0; t < src.count(0); ++t) {
    LesEntry e;
    e.item = 1;
    e.element = src.generator_name(0, t);
    for (const auto& o : fiber.objects) e.in_image = e.in_image || o.object == t;
    auto ft = *pd.class_of(f.image(0, t));
    auto fy = *pd.class_of(f.image(0, y0));
    e.criterion = pd.poset.leq(ft, fy);
    report.entries.push_back(e);
  }

  // (2) a fiber class is hit from π₁(D, fZ) iff its object is X₀ in π₀C.
  // π₁(D, (fX₀, fY₀)) ∋ T ↦ (X₀, T).
  const auto& arrows = target.solve(1, f.image(0, y0) - f.image(0, x0));
  for (std::size_t k = 0; k < fiber.poset.size(); ++k) {
    LesEntry e;
    e.item = 2;
    e.element = fiber.poset.label(k);
    for (const auto& t : arrows)
      e.in_image = e.in_image || fiber.class_of({x0, t}) == k;
    for (std::size_t i = 0; i < fiber.objects.size(); ++i)
      if (fiber.poset.class_of()[i] == k &&
          pc.class_of(src.generator(0, fiber.objects[i].object)) == pc.class_of(src.generator(0, x0)))
        e.criterion = true;
    report.entries.push_back(e);
  }

  // (3) T ∈ π₁(D, fZ) is hit from π₁(C, Z) iff (X₀, T) is the class of (X₀, f(X₁)).
  if (z.dimension() < 1) {
    report.skipped.push_back(3);
    return report;
  }
  auto p1d = pi_n(target, analysis.image(OrientedBasePoint{{z.entries[0]}}));
  const auto& lifts = source.solve(1, z.plus(0) - z.minus(0));
  auto distinguished = fiber.class_of({x0, f.apply(z.minus(1))});
  for (std::size_t k = 0; k < p1d.poset.size(); ++k) {
    LesEntry e;
    e.item = 3;
    e.element = p1d.poset.label(k);
    for (const auto& c : lifts) e.in_image = e.in_image || p1d.class_of(f.apply(c)) == k;
    e.criterion = distinguished && fiber.class_of({x0, p1d.representatives[k]}) == distinguished;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace gaunt
