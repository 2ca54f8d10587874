#pragma once

#include "sofic/core/rational.hpp"
#include "sofic/core/report.hpp"
#include "sofic/halo/halo.hpp"
#include "sofic/metric/structured_perm.hpp"

#include <cstdint>
#include <optional>

namespace sofic {

/// L(Z) x| Z with Z translating Z (or L({0}) x| Z/m with trivial action when
/// gamma_order = m > 0), approximated in the sofic family: the action through
/// its periodic Z/n quotient, L(Z/n) through its regular representation and
/// Gamma through cyclic shifts.
struct ShiftAmalgamationConfig {
  HaloKind halo = HaloKind::DirectSum;
  long modulus = 2;      // coefficient group order for direct sums, modulus for GLf
  long gamma_order = 0;  // 0: Z by translation; m > 0: Z/m acting trivially on {0}
  long n = 8;
  long window = 3;       // pi is certified injective on [max(-w, w-n+1), w]
  int radius = 2;
  Rational eps = Rational(1, 4);
  WreathLayout layout = WreathLayout::Imprimitive;
  bool twist = true;
  std::uint64_t cap = 1u << 20;
  bool export_images = false;  // fill ScenarioOutcome::images with Psi on F
};

/// Explicit images of a permutation-valued map on a finite set of elements.
struct ImageTable {
  std::vector<Json> elements;
  std::vector<std::vector<std::uint32_t>> images;
};

struct ScenarioOutcome {
  CheckReport report;
  Json summary = Json::object();
  std::optional<ImageTable> images;
};

/// Window [max(-w, w-n+1), w] of points on which reduction mod n is injective.
std::pair<long, long> injectivity_window(long window, long n);

ScenarioOutcome run_shift_amalgamation(const ShiftAmalgamationConfig& cfg);

/// Lifting the orbit data of the scenario through its halo keeps A, S, phi
/// and the measured multiplicativity defect.
ScenarioOutcome check_shift_lift_consistency(const ShiftAmalgamationConfig& cfg);

/// Sym_f(Z) x| Z into (Sym(Z/n) x| Z/n) x Z/n on the radius ball of the
/// transposition (0 1) and the translation. `collapse` replaces both finite
/// quotients by the trivial group, which destroys injectivity.
ScenarioOutcome run_symmetric_enrichment_embedding(long n = 8, int radius = 2, bool collapse = false);

/// Graph product of copies of Z over the path on `vertices` vertices into the
/// graph product of copies of Z/q, on the radius ball of the vertex
/// generators; each vertex uses reduction mod q on [-range, range].
ScenarioOutcome run_graph_product_embedding(long vertices = 3, int radius = 2, long q = 17, long range = 8);

}  // namespace sofic
