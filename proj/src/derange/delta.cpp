#include "drg/derange.hpp"

namespace drg {

std::string_view to_string(BoundStatus s) noexcept {
  switch (s) {
    case BoundStatus::Zero: return "zero";
    case BoundStatus::BelowOneOverN: return "below-1/n";
    case BoundStatus::EqualsOneOverN: return "equals-1/n";
    case BoundStatus::UpToTwoOverN: return "in-(1/n,2/n]";
    case BoundStatus::AboveTwoOverN: return "above-2/n";
  }
  return "?";
}

BoundStatus classify(const ExactRatio& delta, std::size_t n) {
  if (delta.is_zero()) return BoundStatus::Zero;
  ExactRatio one_over_n = ratio(1, n);
  ExactRatio two_over_n = ratio(2, n);
  if (delta < one_over_n) return BoundStatus::BelowOneOverN;
  if (delta == one_over_n) return BoundStatus::EqualsOneOverN;
  if (delta <= two_over_n) return BoundStatus::UpToTwoOverN;
  return BoundStatus::AboveTwoOverN;
}

namespace {

void require_transitive(const GroupAction& action) {
  if (!is_transitive(action)) throw Error(ErrorKind::NotTransitive, "action is not transitive");
}

DerangementReport finish(const GroupAction& action, std::uint64_t derangements, std::uint64_t population,
                         bool with_frobenius) {
  DerangementReport r;
  r.derangements = derangements;
  r.population = population;
  r.n = action.size();
  r.delta = ratio(derangements, population);
  r.status = classify(r.delta, r.n);
  if (with_frobenius) {
    r.frobenius = is_frobenius(action);
    const std::uint64_t n = r.n;
    r.frobenius_order_nn1 = r.frobenius && population == n * (n - 1);
    r.frobenius_order_half = r.frobenius && 2 * population == n * (n - 1);
  }
  return r;
}

} // namespace

DerangementReport delta(const GroupAction& action) {
  require_transitive(action);
  const auto& g = action.group();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    count += action.fixed_point_count(g.element_images(i)) == 0;
  }
  return finish(action, count, g.order(), true);
}

DerangementReport delta_by_classes(const GroupAction& action, const ClassTable& classes) {
  require_transitive(action);
  std::uint64_t count = 0, total = 0;
  for (const auto& c : classes.classes) {
    total += c.size;
    if (action.fixed_point_count(c.representative) == 0) count += c.size;
  }
  if (total != action.group().order()) throw Error(ErrorKind::InvalidInput, "class table does not match the group");
  // Frobenius needs a per-element scan; class-based callers use it on large groups.
  DerangementReport r = finish(action, count, total, false);
  std::uint64_t two_fixers = 0;
  for (std::size_t c = 1; c < classes.classes.size(); ++c) {
    two_fixers += action.fixed_point_count(classes.classes[c].representative) >= 2;
  }
  const std::uint64_t n = r.n;
  r.frobenius = two_fixers == 0 && total > n;
  r.frobenius_order_nn1 = r.frobenius && total == n * (n - 1);
  r.frobenius_order_half = r.frobenius && 2 * total == n * (n - 1);
  return r;
}

} // namespace drg
