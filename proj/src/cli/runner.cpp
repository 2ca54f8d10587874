#include "sofic/cli/runner.hpp"

#include "sofic/actions/actions.hpp"
#include "sofic/amalgam/scenarios.hpp"
#include "sofic/compat/compat.hpp"
#include "sofic/halo/graph_word.hpp"
#include "sofic/metric/finite_metric_group.hpp"
#include "sofic/metric/json_io.hpp"
#include "sofic/metric/weak_element.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

namespace sofic {

namespace {

// Typed reads from one JSON object; every read key is remembered so that
// finish() can reject unknown ones.
class Fields {
 public:
  Fields(const Json& j, std::string ptr) : j_(j), ptr_(std::move(ptr)) {
    if (!j_.is_object()) throw SchemaError(ptr_.empty() ? "/" : ptr_, "expected an object");
  }

  std::string at(const std::string& key) const { return ptr_ + "/" + key; }

  bool has(const std::string& key) {
    used_.insert(key);
    return j_.contains(key);
  }

  const Json& raw(const std::string& key) {
    if (!has(key)) throw SchemaError(at(key), "required field missing");
    return j_.at(key);
  }

  long integer(const std::string& key, std::optional<long> def, long lo, long hi) {
    if (!has(key)) {
      if (!def) throw SchemaError(at(key), "required field missing");
      return *def;
    }
    const auto& v = j_.at(key);
    if (!v.is_number_integer()) throw SchemaError(at(key), "expected an integer");
    const long x = v.get<long>();
    if (x < lo || x > hi) throw SchemaError(at(key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
  }

  std::optional<std::uint64_t> u64(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const auto& v = j_.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw SchemaError(at(key), "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  double real(const std::string& key, double def, double lo, double hi) {
    if (!has(key)) return def;
    const auto& v = j_.at(key);
    if (!v.is_number()) throw SchemaError(at(key), "expected a number");
    const double x = v.get<double>();
    if (!(x >= lo && x <= hi)) throw SchemaError(at(key), "out of range");
    return x;
  }

  Rational rational(const std::string& key, const Rational& def, const Rational& lo, const Rational& hi) {
    if (!has(key)) return def;
    Rational x;
    try {
      x = rational_from_json(j_.at(key));
    } catch (const std::exception& e) {
      throw SchemaError(at(key), std::string("expected a rational: ") + e.what());
    }
    if (x <= lo || x > hi) throw SchemaError(at(key), "must lie in (" + to_string(lo) + ", " + to_string(hi) + "]");
    return x;
  }

  bool boolean(const std::string& key, bool def) {
    if (!has(key)) return def;
    if (!j_.at(key).is_boolean()) throw SchemaError(at(key), "expected true or false");
    return j_.at(key).get<bool>();
  }

  std::string choice(const std::string& key, const std::vector<std::string>& options, std::optional<std::string> def = std::nullopt) {
    if (!has(key)) {
      if (!def) throw SchemaError(at(key), "required field missing");
      return *def;
    }
    const auto& v = j_.at(key);
    if (!v.is_string()) throw SchemaError(at(key), "expected a string");
    const auto s = v.get<std::string>();
    if (std::find(options.begin(), options.end(), s) == options.end()) {
      std::string all;
      for (const auto& o : options) all += (all.empty() ? "" : ", ") + o;
      throw SchemaError(at(key), "must be one of: " + all);
    }
    return s;
  }

  void finish() const {
    for (const auto& [k, v] : j_.items())
      if (!used_.count(k)) throw SchemaError(at(k), "unknown field");
  }

 private:
  const Json& j_;
  std::string ptr_;
  std::set<std::string> used_;
};

struct Record {
  CheckReport report;
  double ms = 0;
};

struct Context {
  std::optional<std::uint64_t> seed;
  std::uint64_t cap;

  std::uint64_t need_seed() const {
    if (!seed) throw SchemaError("/seed", "required: this scenario samples");
    return *seed;
  }
};

struct Outcome {
  std::vector<Record> records;
  Json summary = Json::object();

  template <class F>
  void timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    records.push_back({std::move(r), ms});
  }
};

std::vector<StructuredPerm> structured_all(std::size_t n) {
  std::vector<StructuredPerm> out;
  for (const auto& p : all_permutations(n)) out.push_back(StructuredPerm::from(p));
  return out;
}

Field prime_field(Fields& p, const std::string& key, long def) {
  const long v = p.integer(key, def, 2, 251);
  try {
    return Field::prime(static_cast<std::uint32_t>(v));
  } catch (const std::exception& e) {
    throw SchemaError(p.at(key), e.what());
  }
}

// --- verify-metric ---------------------------------------------------------

CheckReport hamming_hs_bridge(std::size_t n, double tol) {
  CheckReport r("hamming_hs_bridge");
  const auto perms = all_permutations(n);
  double worst = 0;
  for (const auto& s : perms)
    for (const auto& t : perms) {
      const double hs = hs_distance(complex_permutation_matrix(s), complex_permutation_matrix(t));
      const double gap = std::abs(to_double(hamming_distance(s, t)) - 0.5 * hs * hs);
      if (gap > worst || r.worst_witness.is_null()) {
        worst = std::max(worst, gap);
        r.worst_witness = {{"sigma", s}, {"tau", t}};
      }
      if (gap > tol) r.fail({{"sigma", s}, {"tau", t}, {"gap", gap}});
    }
  r.defect = worst;
  r.details["pairs"] = perms.size() * perms.size();
  r.details["tolerance"] = tol;
  return r;
}

Outcome verify_metric(Fields& p, const Context&) {
  Outcome out;
  const auto check = p.choice("check", {"hamming_hs_bridge", "weak_wreath_axioms", "metric_transform", "biinvariant"});
  if (check == "hamming_hs_bridge") {
    const auto n = static_cast<std::size_t>(p.integer("n", 4, 1, 6));
    const double tol = p.real("tolerance", 1e-9, 0, 1);
    p.finish();
    out.timed([&] { return hamming_hs_bridge(n, tol); });
  } else if (check == "weak_wreath_axioms") {
    const int q = static_cast<int>(p.integer("inner_order", 2, 1, 6));
    const auto n = static_cast<std::size_t>(p.integer("n", 2, 1, 4));
    const auto limit = static_cast<std::size_t>(p.integer("exhaustive_limit", 200, 1, 1000));
    p.finish();
    out.timed([&] {
      const auto g = weak_wreath_table(std::make_shared<const FiniteMetricGroup>(FiniteMetricGroup::cyclic(q)), n);
      auto r = check_biinvariant_metric(g, limit);
      r.check = "weak_wreath_axioms";
      r.details["order"] = g.size();
      return r;
    });
  } else if (check == "metric_transform") {
    const auto k = static_cast<std::size_t>(p.integer("degree", 3, 1, 4));
    const auto powers = static_cast<unsigned>(p.integer("max_power", 3, 0, 4));
    p.finish();
    const auto base = FiniteMetricGroup::symmetric_hamming(k);
    for (unsigned n = 0; n <= powers; ++n) {
      out.timed([&] {
        auto r = check_biinvariant_metric(metric_transform_pow(base, n), 200);
        r.check = "metric_transform_power_" + std::to_string(n);
        return r;
      });
    }
    out.timed([&] {
      CheckReport r("amplify_bounds");
      for (const auto& d : base.metric()) {
        const auto f = amplify(d);
        if (f < d || f > 2 * d) r.fail({{"d", rational_to_json(d)}});
      }
      return r;
    });
  } else {
    const auto& raw = p.raw("group");
    const auto limit = static_cast<std::size_t>(p.integer("exhaustive_limit", 200, 1, 1000));
    p.finish();
    std::optional<FiniteMetricGroup> g;
    try {
      g = metric_group_from_json(raw);
    } catch (const std::exception& e) {
      throw SchemaError(p.at("group"), e.what());
    }
    out.timed([&] { return check_biinvariant_metric(*g, limit); });
  }
  return out;
}

// --- verify-compat ---------------------------------------------------------

template <class Family>
CheckReport wreath_suite(const Family& fam, const typename Family::Group& inner,
                         const std::function<typename Family::Element(SplitMix64&)>& random_inner, std::size_t n_max,
                         std::size_t cases, std::uint64_t seed) {
  CheckReport r("wreath_" + Family::name());
  SplitMix64 seeds(seed);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t share = cases / n_max + (n == n_max ? cases % n_max : 0);
    auto child = check_wreath_compatibility<Family>(fam, inner, n, random_inner, share, seeds());
    child.check += ":n=" + std::to_string(n);
    r.absorb(std::move(child));
  }
  r.details["cases"] = cases;
  return r;
}

Outcome verify_compat(Fields& p, const Context& ctx) {
  Outcome out;
  const auto map = p.choice("map", {"product", "wreath"});
  if (map == "product") {
    const auto family = p.choice("family", {"sofic", "linear", "hyperlinear", "weak"});
    const auto limit = static_cast<std::size_t>(p.integer("exhaustive_limit", 40000, 1, 10000000));
    const auto samples = static_cast<std::size_t>(p.integer("samples", 2000, 1, 1000000));
    auto seed_for = [&](std::size_t pairs) { return pairs * pairs <= limit && !ctx.seed ? std::uint64_t{0} : ctx.need_seed(); };
    if (family == "sofic") {
      const auto a = static_cast<std::size_t>(p.integer("left_degree", 3, 1, 5));
      const auto b = static_cast<std::size_t>(p.integer("right_degree", 4, 1, 5));
      p.finish();
      const auto left = structured_all(a), right = structured_all(b);
      const auto seed = seed_for(left.size() * right.size());
      out.timed([&] {
        return check_product_compatibility(SoficFamily{}, StructuredSymmetricGroup{StructuredPerm::identity(a)},
                                           StructuredSymmetricGroup{StructuredPerm::identity(b)}, left, right, seed, limit, samples);
      });
    } else if (family == "linear") {
      const auto dim = static_cast<std::size_t>(p.integer("dim", 2, 1, 2));
      const Field field = prime_field(p, "p", 2);
      p.finish();
      const auto elems = general_linear_group(dim, field);
      const auto seed = seed_for(elems.size() * elems.size());
      const GeneralLinearGroup gl{dim, field};
      out.timed([&] { return check_product_compatibility(LinearFamily{field}, gl, gl, elems, elems, seed, limit, samples); });
    } else if (family == "hyperlinear") {
      const auto dim = static_cast<std::size_t>(p.integer("dim", 2, 1, 4));
      const auto count = static_cast<std::size_t>(p.integer("elements", 14, 1, 64));
      const double tol = p.real("tolerance", 1e-9, 0, 1);
      p.finish();
      const auto seed = ctx.need_seed();
      SplitMix64 rng(seed);
      const UnitaryGroup u{dim};
      std::vector<ComplexMatrix> left{u.identity()}, right{u.identity()};
      for (std::size_t k = 0; k < count; ++k) {
        left.push_back(random_unitary(dim, rng));
        right.push_back(random_unitary(dim, rng));
      }
      out.timed([&] { return check_product_compatibility(HyperlinearFamily{}, u, u, left, right, seed, limit, samples, tol); });
    } else {
      const int a = static_cast<int>(p.integer("left_order", 2, 1, 8));
      const int b = static_cast<int>(p.integer("right_order", 3, 1, 8));
      p.finish();
      const auto ga = std::make_shared<const FiniteMetricGroup>(FiniteMetricGroup::cyclic(a));
      const auto gb = std::make_shared<const FiniteMetricGroup>(FiniteMetricGroup::cyclic(b));
      std::vector<WeakElement> left, right;
      for (int i = 0; i < a; ++i) left.push_back(WeakElement::table(ga, i));
      for (int i = 0; i < b; ++i) right.push_back(WeakElement::table(gb, i));
      const auto seed = seed_for(left.size() * right.size());
      out.timed([&] {
        return check_product_compatibility(WeakFamily{}, WeakGroup{left.front()}, WeakGroup{right.front()}, left, right, seed, limit,
                                           samples);
      });
    }
    return out;
  }

  const auto family = p.choice("family", {"sofic", "linear", "hyperlinear", "weak", "all"}, "all");
  const auto n_max = static_cast<std::size_t>(p.integer("n_max", 4, 1, 6));
  const auto cases = static_cast<std::size_t>(p.integer("cases", 500, 1, 100000));
  const auto layout = p.choice("layout", {"imprimitive", "product_action"}, "imprimitive");
  const auto degree = static_cast<std::size_t>(p.integer("sofic_degree", 3, 1, 5));
  const Field field = prime_field(p, "linear_p", 3);
  const auto dim = static_cast<std::size_t>(p.integer("linear_dim", 2, 1, 3));
  const auto udim = static_cast<std::size_t>(p.integer("unitary_dim", 2, 1, 4));
  const int order = static_cast<int>(p.integer("weak_order", 3, 1, 8));
  p.finish();
  const auto seed = ctx.need_seed();
  SplitMix64 seeds(seed);
  const bool all = family == "all";
  const auto s_sofic = seeds(), s_linear = seeds(), s_hyper = seeds(), s_weak = seeds();
  if (all || family == "sofic") {
    SoficFamily fam;
    fam.layout = layout == "imprimitive" ? WreathLayout::Imprimitive : WreathLayout::ProductAction;
    const auto perms = structured_all(degree);
    out.timed([&] {
      return wreath_suite<SoficFamily>(fam, StructuredSymmetricGroup{StructuredPerm::identity(degree)},
                                       [&](SplitMix64& rng) { return perms[rng.below(perms.size())]; }, n_max, cases, s_sofic);
    });
  }
  if (all || family == "linear") {
    const auto elems = general_linear_group(dim, field);
    out.timed([&] {
      return wreath_suite<LinearFamily>(LinearFamily{field}, GeneralLinearGroup{dim, field},
                                        [&](SplitMix64& rng) { return elems[rng.below(elems.size())]; }, n_max, cases, s_linear);
    });
  }
  if (all || family == "hyperlinear") {
    out.timed([&] {
      return wreath_suite<HyperlinearFamily>(HyperlinearFamily{}, UnitaryGroup{udim},
                                             [&](SplitMix64& rng) { return random_unitary(udim, rng); }, n_max, cases, s_hyper);
    });
  }
  if (all || family == "weak") {
    const auto g = std::make_shared<const FiniteMetricGroup>(FiniteMetricGroup::cyclic(order));
    out.timed([&] {
      return wreath_suite<WeakFamily>(WeakFamily{}, WeakGroup{WeakElement::table(g, 0)},
                                      [&](SplitMix64& rng) { return WeakElement::table(g, static_cast<int>(rng.below(order))); },
                                      n_max, cases, s_weak);
    });
  }
  return out;
}

// --- verify-action ---------------------------------------------------------

CheckReport refinement_suite(std::size_t trials, std::size_t max_a, std::uint64_t seed) {
  CheckReport r("refinement");
  SplitMix64 rng(seed);
  const CyclicGroup labels{0};
  std::size_t smallest_s0 = max_a;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t a = 2 + rng.below(max_a - 1);
    const std::size_t nf = 1 + rng.below(3);
    std::vector<long> names(nf);
    std::iota(names.begin(), names.end(), 1L);
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < nf; ++i) {
      std::vector<std::uint32_t> img(a);
      std::iota(img.begin(), img.end(), 0u);
      std::shuffle(img.begin(), img.end(), rng);
      perms.push_back(Permutation::from_images(std::move(img)));
    }
    const ApproximationMap<CyclicGroup, SymmetricGroup> phi(labels, SymmetricGroup{a}, FiniteSubset<CyclicGroup>(names),
                                                            [&](const long& g) { return perms[static_cast<std::size_t>(g - 1)]; });
    const Rational eps(BigInt(1 + rng.below(9)), BigInt(10));
    const Rational bound = (1 - eps / Rational(BigInt(nf + 1))) * Rational(BigInt(a));
    const auto floor_bound = static_cast<std::size_t>(BigInt(boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound)));
    std::size_t need = std::min(a, floor_bound + 1);
    need = std::min(a, need + rng.below(a - need + 1));
    std::vector<std::uint32_t> order(a);
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint32_t> s(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(need));
    std::sort(s.begin(), s.end());
    const auto s0 = refine_support(phi, s, eps);
    if (!(Rational(BigInt(s0.size())) > (1 - eps) * Rational(BigInt(a)))) {
      r.fail({{"trial", trial}, {"clause", "size"}, {"A", a}, {"S0", s0.size()}});
    }
    for (auto x : s0)
      for (const auto& q : perms)
        if (!std::binary_search(s.begin(), s.end(), q(x))) r.fail({{"trial", trial}, {"clause", "stability"}, {"x", x}});
    smallest_s0 = std::min(smallest_s0, s0.size());
  }
  r.details["trials"] = trials;
  r.details["max_A"] = max_a;
  r.details["smallest_S0"] = smallest_s0;
  r.details["seed"] = seed;
  return r;
}

ShiftAmalgamationConfig read_amalgamation(Fields& p, std::uint64_t cap) {
  ShiftAmalgamationConfig cfg;
  const auto halo = p.choice("halo", {"sym", "alt", "directsum", "glf"}, "directsum");
  cfg.halo = halo_kind_from_string(halo);
  cfg.modulus = p.integer("modulus", 2, 2, 16);
  cfg.gamma_order = p.integer("gamma_order", 0, 0, 64);
  cfg.n = p.integer("n", 8, 1, 64);
  cfg.window = p.integer("window", 3, 0, 64);
  cfg.radius = static_cast<int>(p.integer("radius", 2, 0, 4));
  cfg.eps = p.rational("eps", Rational(1, 4), 0, 1);
  cfg.layout = p.choice("layout", {"imprimitive", "product_action"}, "imprimitive") == "imprimitive" ? WreathLayout::Imprimitive
                                                                                                    : WreathLayout::ProductAction;
  cfg.twist = p.boolean("twist", true);
  cfg.cap = cap;
  return cfg;
}

Outcome verify_action(Fields& p, const Context& ctx) {
  Outcome out;
  const auto check = p.choice("check", {"lef_shift", "refinement", "folner", "lift_consistency"});
  if (check == "lef_shift") {
    const long n = p.integer("n", 8, 2, 4096);
    const long window = p.integer("window", 3, 0, 4096);
    const long radius = p.integer("radius", 2, 1, 64);
    const Rational eps = p.rational("eps", Rational(1, 4), 0, 1);
    p.finish();
    out.timed([&] {
      CheckReport r("lef_shift");
      const CyclicGroup z{0}, q{n};
      std::vector<long> tops;
      for (long g = -radius; g <= radius; ++g) tops.push_back(g);
      const auto [lo, hi] = injectivity_window(window, n);
      std::vector<long> pts;
      std::map<long, long> pi;
      for (long x = lo; x <= hi; ++x) {
        pts.push_back(x);
        pi[x] = q.reduce(x);
      }
      std::vector<long> y(static_cast<std::size_t>(n));
      std::iota(y.begin(), y.end(), 0L);
      const std::function<long(const long&, long)> shift = [](const long& g, long x) { return x + g; };
      const ActionFragment<CyclicGroup> frag{z, FiniteSubset<CyclicGroup>(tops), pts, shift, std::nullopt};
      const LEFActionWitness<CyclicGroup, CyclicGroup> w{
          q, y, [q](const long& a, long b) { return q.reduce(a + b); }, [q](const long& g) { return q.reduce(g); }, pi, std::nullopt};
      r.absorb(check_lef_action_witness(frag, w));
      if (r.pass) {
        const auto orbit = lef_to_orbit_approx(frag, w, ctx.cap);
        r.absorb(check_orbit_approximation(orbit, eps, shift));
        r.details["A"] = orbit.a_size();
      }
      r.details["window"] = {lo, hi};
      return r;
    });
  } else if (check == "refinement") {
    const auto trials = static_cast<std::size_t>(p.integer("trials", 500, 1, 100000));
    const auto max_a = static_cast<std::size_t>(p.integer("max_A", 64, 2, 4096));
    p.finish();
    const auto seed = ctx.need_seed();
    out.timed([&] { return refinement_suite(trials, max_a, seed); });
  } else if (check == "folner") {
    const Rational eps = p.rational("eps", Rational(1, 4), 0, 1);
    const long radius = p.integer("radius", 1, 1, 4);
    p.finish();
    out.timed([&] {
      const LatticeGroup z1{1};
      const auto halo = Halo::direct_sum(2);
      std::vector<std::vector<long>> gens;
      for (long g = 1; g <= radius; ++g) {
        gens.push_back({g});
        gens.push_back({-g});
      }
      const FiniteSubset<LatticeGroup> f(gens);
      const FiniteSubset<Halo> e({halo.identity(), halo.unit(0), halo.unit(1), halo.multiply(halo.unit(0), halo.unit(1))});
      const std::function<HaloElement(const std::vector<long>&, const HaloElement&)> beta = [halo](const std::vector<long>& g,
                                                                                                  const HaloElement& h) {
        return halo.relabel(h, [&](long x) { return x + g[0]; });
      };
      const auto data = folner_automorphic_approx<Halo, Halo>(z1, f, e, eps, beta, halo, [](const HaloElement& h) { return h; },
                                                              ctx.cap);
      auto r = check_automorphic_approximation<LatticeGroup, Halo, Halo>(data, eps, halo, beta);
      r.check = "folner_lamplighter";
      return r;
    });
  } else {
    std::vector<std::string> names;
    if (p.has("scenarios")) {
      const auto& list = p.raw("scenarios");
      if (!list.is_array()) throw SchemaError(p.at("scenarios"), "expected an array of scenario names");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto* info = list[i].is_string() ? find_scenario(list[i].get<std::string>()) : nullptr;
        if (!info || info->kind != "amalgamate") {
          throw SchemaError(p.at("scenarios") + "/" + std::to_string(i), "not a bundled amalgamate scenario");
        }
        names.push_back(info->name);
      }
    } else {
      for (const auto& s : scenario_catalog())
        if (s.kind == "amalgamate") names.push_back(s.name);
    }
    p.finish();
    for (const auto& name : names) {
      const auto* info = find_scenario(name);
      Fields sub(info->config.at("params"), "/params");
      const auto cfg = read_amalgamation(sub, ctx.cap);
      out.timed([&] {
        auto r = check_shift_lift_consistency(cfg).report;
        r.check = "lift_consistency:" + name;
        return r;
      });
    }
  }
  return out;
}

// --- amalgamate ------------------------------------------------------------

Outcome amalgamate_kind(Fields& p, const Context& ctx) {
  Outcome out;
  const auto cfg = read_amalgamation(p, ctx.cap);
  p.finish();
  out.timed([&] {
    auto result = run_shift_amalgamation(cfg);
    out.summary = result.summary;
    return result.report;
  });
  return out;
}

// --- normal-form -----------------------------------------------------------

Graph read_graph(Fields& p) {
  if (!p.has("graph")) return Graph::path(4);
  const auto& g = p.raw("graph");
  const auto ptr = p.at("graph");
  if (!g.is_object()) throw SchemaError(ptr, "expected an object");
  auto size = [&](const char* key) {
    const auto& v = g.at(key);
    if (!v.is_number_integer() || v.get<long>() < 1 || v.get<long>() > 64) throw SchemaError(ptr + "/" + key, "expected 1..64");
    return v.get<long>();
  };
  if (g.contains("path")) return Graph::path(size("path"));
  if (g.contains("complete")) return Graph::complete(size("complete"));
  if (g.contains("edgeless")) return Graph::edgeless(size("edgeless"));
  try {
    return Graph::from_json(g);
  } catch (const std::exception& e) {
    throw SchemaError(ptr, e.what());
  }
}

CheckReport reduction_confluence(const GraphProductGroup& gp, std::size_t words, std::size_t max_len, std::size_t strategies,
                                 std::uint64_t seed) {
  CheckReport r("reduction_confluence");
  SplitMix64 rng(seed);
  const auto nv = gp.graph().vertices().size();
  const long q = gp.vertex_order();
  for (std::size_t i = 0; i < words; ++i) {
    GraphWord w;
    const std::size_t len = rng.below(max_len + 1);
    for (std::size_t k = 0; k < len; ++k) {
      const long v = gp.graph().vertices()[rng.below(nv)];
      const long value = q == 0 ? static_cast<long>(rng.below(7)) - 3 : static_cast<long>(rng.below(static_cast<std::uint64_t>(q)));
      if (gp.normalize(value) != 0) w.syllables.push_back({v, gp.normalize(value)});
    }
    const auto reduced = gp.reduce(w);
    if (!gp.is_reduced(reduced)) r.fail({{"word", gp.format(w)}, {"clause", "reduce"}});
    const auto canon = gp.shuffle_normal_form(reduced);
    for (std::size_t s = 0; s < strategies; ++s) {
      const auto other = gp.shuffle_normal_form(gp.reduce_random(w, rng));
      if (other != canon) r.fail({{"word", gp.format(w)}, {"canonical", gp.format(canon)}, {"strategy_result", gp.format(other)}});
    }
  }
  r.details["words"] = words;
  r.details["strategies"] = strategies;
  r.details["seed"] = seed;
  return r;
}

// Over a complete graph the graph product is the direct sum: coordinate sums
// must biject onto (Z/q)^V and turn products into sums.
CheckReport complete_graph_direct_sum(long max_vertices, long max_order, std::uint64_t cap) {
  CheckReport r("complete_graph_direct_sum");
  for (long k = 1; k <= max_vertices; ++k)
    for (long q = 2; q <= max_order; ++q) {
      const GraphProductGroup gp(Graph::complete(k), q);
      const auto elems = gp.elements(cap);
      auto coords = [&](const GraphWord& w) {
        std::vector<long> t(static_cast<std::size_t>(k), 0);
        for (const auto& s : w.syllables) t[static_cast<std::size_t>(s.vertex)] = (t[static_cast<std::size_t>(s.vertex)] + s.value) % q;
        return t;
      };
      long expected = 1;
      for (long i = 0; i < k; ++i) expected *= q;
      std::set<std::vector<long>> seen;
      for (const auto& w : elems) seen.insert(coords(w));
      if (static_cast<long>(elems.size()) != expected || static_cast<long>(seen.size()) != expected) {
        r.fail({{"vertices", k}, {"q", q}, {"elements", elems.size()}, {"distinct", seen.size()}});
      }
      for (const auto& a : elems)
        for (const auto& b : elems) {
          const auto ab = coords(gp.multiply(a, b));
          auto sum = coords(a);
          const auto cb = coords(b);
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (sum[i] + cb[i]) % q;
          if (ab != sum) r.fail({{"vertices", k}, {"q", q}, {"a", gp.format(a)}, {"b", gp.format(b)}});
        }
    }
  r.details["max_vertices"] = max_vertices;
  r.details["max_order"] = max_order;
  return r;
}

Outcome normal_form(Fields& p, const Context& ctx) {
  Outcome out;
  const Graph graph = read_graph(p);
  const long q = p.integer("q", 3, 0, 64);
  const auto words = static_cast<std::size_t>(p.integer("words", 0, 0, 100000));
  const auto max_len = static_cast<std::size_t>(p.integer("max_length", 20, 0, 1000));
  const auto strategies = static_cast<std::size_t>(p.integer("strategies", 10, 1, 1000));
  std::vector<std::string> inputs;
  if (p.has("input_words")) {
    const auto& list = p.raw("input_words");
    if (!list.is_array()) throw SchemaError(p.at("input_words"), "expected an array of words");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_string()) throw SchemaError(p.at("input_words") + "/" + std::to_string(i), "expected a string");
      inputs.push_back(list[i].get<std::string>());
    }
  }
  std::optional<std::pair<long, long>> complete;
  if (p.has("complete_check")) {
    Fields c(p.raw("complete_check"), p.at("complete_check"));
    const long mv = c.integer("max_vertices", 3, 1, 4);
    const long mo = c.integer("max_order", 3, 2, 5);
    c.finish();
    complete = {mv, mo};
  }
  p.finish();
  const GraphProductGroup gp(graph, q);
  Json canon = Json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    try {
      const auto w = gp.parse(inputs[i]);
      canon.push_back({{"word", inputs[i]}, {"canonical", gp.format(gp.canonical(w))}});
    } catch (const std::exception& e) {
      throw SchemaError(p.at("input_words") + "/" + std::to_string(i), e.what());
    }
  }
  if (!inputs.empty()) out.summary["canonical_forms"] = canon;
  if (words > 0) {
    const auto seed = ctx.need_seed();
    out.timed([&] { return reduction_confluence(gp, words, max_len, strategies, seed); });
  }
  if (complete) out.timed([&] { return complete_graph_direct_sum(complete->first, complete->second, ctx.cap); });
  return out;
}

// --- lef-embed -------------------------------------------------------------

Outcome lef_embed(Fields& p, const Context&) {
  Outcome out;
  const auto engine = p.choice("engine", {"semidirect", "graph_product"});
  if (engine == "semidirect") {
    const long n = p.integer("n", 8, 2, 16);
    const int radius = static_cast<int>(p.integer("radius", 2, 1, 3));
    const bool collapse = p.boolean("collapse", false);
    p.finish();
    out.timed([&] {
      auto res = run_symmetric_enrichment_embedding(n, radius, collapse);
      out.summary = res.summary;
      return res.report;
    });
  } else {
    const long vertices = p.integer("vertices", 3, 1, 6);
    const int radius = static_cast<int>(p.integer("radius", 2, 1, 3));
    const long q = p.integer("q", 17, 2, 1009);
    const long range = p.integer("range", 8, 1, 1000);
    p.finish();
    out.timed([&] {
      auto res = run_graph_product_embedding(vertices, radius, q, range);
      out.summary = res.summary;
      return res.report;
    });
  }
  return out;
}

Json make_config(const std::string& kind, Json params, std::optional<std::uint64_t> seed = std::nullopt) {
  Json j = {{"schema", kConfigSchema}, {"kind", kind}, {"params", std::move(params)}};
  if (seed) j["seed"] = *seed;
  return j;
}

std::vector<ScenarioInfo> build_catalog() {
  std::vector<ScenarioInfo> c;
  auto add = [&](std::string name, std::string kind, std::string anchor, std::string description, Json params,
                 std::optional<std::uint64_t> seed = std::nullopt) {
    Json config = make_config(kind, std::move(params), seed);
    config["name"] = name;
    c.push_back({std::move(name), std::move(kind), std::move(anchor), std::move(description), std::move(config)});
  };
  add("metric_hamming_sym4", "verify-metric", "Hamming distance as half the squared Hilbert-Schmidt distance",
      "normalized Hamming distance against permutation matrices over Sym(4)", {{"check", "hamming_hs_bridge"}, {"n", 4}});
  add("metric_weak_wreath_z2", "verify-metric", "bi-invariant metric on a wreath product of metric groups",
      "exhaustive metric and invariance axioms on (Z/2) wr Sym(2)", {{"check", "weak_wreath_axioms"}, {"inner_order", 2}, {"n", 2}});
  add("metric_transform_pow", "verify-metric", "amplified metric 2d - d^2",
      "iterated metric amplification on Sym(3) stays a bi-invariant metric", {{"check", "metric_transform"}, {"degree", 3}, {"max_power", 3}});
  add("compat_sofic_exhaustive", "verify-compat", "product map for permutation metrics",
      "exhaustive product-map clauses over Sym(3) x Sym(4)", {{"map", "product"}, {"family", "sofic"}, {"left_degree", 3}, {"right_degree", 4}});
  add("compat_linear_gl2f2", "verify-compat", "product map for rank metrics",
      "exhaustive product-map clauses over GL2(F2) x GL2(F2)", {{"map", "product"}, {"family", "linear"}, {"dim", 2}, {"p", 2}});
  add("compat_hyperlinear_sampled", "verify-compat", "product map for Hilbert-Schmidt metrics",
      "product-map clauses on seeded random unitaries of U(2)", {{"map", "product"}, {"family", "hyperlinear"}, {"dim", 2}, {"elements", 14}},
      11);
  add("compat_wreath_conjugation", "verify-compat", "wreath maps: conjugation, homomorphism and continuity clauses",
      "500 seeded wreath cases per family with n <= 4", {{"map", "wreath"}, {"family", "all"}, {"n_max", 4}, {"cases", 500}}, 1);
  add("action_z_shift_lef", "verify-action", "LEF witness and orbit approximation of a translation action",
      "Z translating Z modelled by Z/8 on the window [-3, 3]", {{"check", "lef_shift"}, {"n", 8}, {"window", 3}, {"radius", 2}});
  add("action_refinement_suite", "verify-action", "refinement of the good set S0",
      "500 seeded refinements with |A| <= 64", {{"check", "refinement"}, {"trials", 500}, {"max_A", 64}}, 500);
  add("action_folner_lamplighter", "verify-action", "Folner boxes give automorphic approximations",
      "Z on the lamplighter base through a Folner box", {{"check", "folner"}, {"eps", "1/4"}});
  add("action_lift_consistency", "verify-action", "lifting orbit data through a halo",
      "lift keeps A, S and the measured defect on every bundled amalgamation", {{"check", "lift_consistency"}});
  add("lamplighter_shift_amalgamation", "amalgamate", "amalgamation of approximations for a halo product",
      "Z/2 lamplighter over Z, sofic family, n = 8, window 3",
      {{"halo", "directsum"}, {"modulus", 2}, {"n", 8}, {"window", 3}, {"radius", 2}, {"eps", "1/4"}});
  add("amalgam_exact_z2", "amalgamate", "amalgamation with exact components",
      "Z/2 acting trivially on Z/2: every component is a homomorphism", {{"halo", "directsum"}, {"modulus", 2}, {"gamma_order", 2}, {"eps", "1/4"}});
  add("lampshuffler_amalgamation", "amalgamate", "amalgamation for the symmetric enrichment",
      "finitary permutations of Z over Z, Lambda = Sym(8), window 4",
      {{"halo", "sym"}, {"n", 8}, {"window", 4}, {"radius", 2}, {"eps", "1/4"}});
  add("normal_form_p4_z3", "normal-form", "reduced words are unique up to shuffles",
      "100 seeded words on the path P4 over Z/3 with 10 reduction strategies, plus complete graphs",
      {{"graph", {{"path", 4}}},
       {"q", 3},
       {"words", 100},
       {"max_length", 20},
       {"strategies", 10},
       {"complete_check", {{"max_vertices", 3}, {"max_order", 3}}}},
      9);
  add("lef_graph_product_p3", "lef-embed", "graph products of LEF groups are LEF",
      "copies of Z over P3 into copies of Z/17 on the radius-2 ball",
      {{"engine", "graph_product"}, {"vertices", 3}, {"radius", 2}, {"q", 17}, {"range", 8}});
  add("lef_symmetric_enrichment", "lef-embed", "halo products of LEF actions are LEF",
      "Sym_f(Z) x| Z into (Sym(8) x| Z/8) x Z/8 on the radius-2 ball", {{"engine", "semidirect"}, {"n", 8}, {"radius", 2}});
  return c;
}

std::string defect_text(const Json& d) {
  if (d.is_null()) return "-";
  if (d.is_object() && d.contains("num")) {
    const auto den = d.at("den").dump();
    return den == "1" ? d.at("num").dump() : d.at("num").dump() + "/" + den;
  }
  if (d.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(3) << d.get<double>();
    return s.str();
  }
  return d.dump();
}

}  // namespace

const std::vector<std::string>& scenario_kinds() {
  static const std::vector<std::string> kinds{"verify-metric", "verify-compat", "verify-action", "amalgamate", "normal-form", "lef-embed"};
  return kinds;
}

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = build_catalog();
  return catalog;
}

const ScenarioInfo* find_scenario(const std::string& name) {
  for (const auto& s : scenario_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

Json catalog_json() {
  Json out = Json::array();
  for (const auto& s : scenario_catalog())
    out.push_back({{"name", s.name}, {"kind", s.kind}, {"anchor", s.anchor}, {"description", s.description}, {"config", s.config}});
  return out;
}

Json run_scenario(const Json& config, const RunOverrides& overrides) {
  const auto start = std::chrono::steady_clock::now();
  Fields top(config, "");
  if (top.integer("schema", std::nullopt, 0, 1000) != kConfigSchema) {
    throw SchemaError("/schema", "unsupported config schema (expected " + std::to_string(kConfigSchema) + ")");
  }
  const auto kind = top.choice("kind", scenario_kinds());
  std::string name;
  if (top.has("name")) {
    if (!config.at("name").is_string()) throw SchemaError("/name", "expected a string");
    name = config.at("name").get<std::string>();
  }
  Context ctx{top.u64("seed"), top.u64("cap").value_or(1u << 20)};
  if (overrides.seed) ctx.seed = overrides.seed;
  if (overrides.cap) ctx.cap = *overrides.cap;
  static const Json empty = Json::object();
  const Json& params_json = top.has("params") ? config.at("params") : empty;
  top.finish();
  Fields params(params_json, "/params");

  Outcome outcome;
  try {
    if (kind == "verify-metric") outcome = verify_metric(params, ctx);
    else if (kind == "verify-compat") outcome = verify_compat(params, ctx);
    else if (kind == "verify-action") outcome = verify_action(params, ctx);
    else if (kind == "amalgamate") outcome = amalgamate_kind(params, ctx);
    else if (kind == "normal-form") outcome = normal_form(params, ctx);
    else outcome = lef_embed(params, ctx);
  } catch (const PreconditionError& e) {
    CheckReport r("precondition");
    r.fail({{"error", e.what()}});
    outcome.records.push_back({std::move(r), 0});
  }

  std::sort(outcome.records.begin(), outcome.records.end(), [](const Record& a, const Record& b) { return a.report.check < b.report.check; });
  bool pass = true;
  Json checks = Json::array();
  for (const auto& rec : outcome.records) {
    pass = pass && rec.report.pass;
    checks.push_back({{"name", rec.report.check},
                      {"status", rec.report.status()},
                      {"defect", rec.report.defect},
                      {"worst_witness", rec.report.worst_witness},
                      {"runtime_ms", rec.ms},
                      {"report", rec.report.to_json()}});
  }
  Json echo = config;
  if (ctx.seed) echo["seed"] = *ctx.seed;
  echo["cap"] = ctx.cap;
  return {{"tool", "sofic"},
          {"version", kToolVersion},
          {"report_schema", kReportSchema},
          {"config", echo},
          {"verdict", pass ? "pass" : "fail"},
          {"checks", checks},
          {"summary", outcome.summary},
          {"runtime_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
}

Json strip_runtime(Json report) {
  report.erase("runtime_ms");
  for (auto& c : report["checks"]) c.erase("runtime_ms");
  return report;
}

std::string format_run_text(const Json& report) {
  std::ostringstream out;
  const auto& cfg = report.at("config");
  out << "scenario  " << cfg.value("name", std::string("(unnamed)")) << " [" << cfg.at("kind").get<std::string>() << "]\n";
  out << "seed      " << (cfg.contains("seed") ? cfg.at("seed").dump() : "-") << "\n";
  out << "verdict   " << (report.at("verdict") == "pass" ? "PASS" : "FAIL") << "\n\n";
  std::size_t width = 5;
  for (const auto& c : report.at("checks")) width = std::max(width, c.at("name").get<std::string>().size());
  out << std::left << std::setw(static_cast<int>(width + 2)) << "CHECK" << std::setw(8) << "STATUS" << std::setw(14) << "DEFECT"
      << "TIME(ms)\n";
  for (const auto& c : report.at("checks")) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << c.at("name").get<std::string>() << std::setw(8)
        << c.at("status").get<std::string>() << std::setw(14) << defect_text(c.at("defect")) << std::fixed << std::setprecision(1)
        << c.value("runtime_ms", 0.0) << "\n";
  }
  if (!report.at("summary").empty()) out << "\nsummary " << report.at("summary").dump() << "\n";
  return out.str();
}

}  // namespace sofic
