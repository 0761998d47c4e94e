#include "pathfusion/verify.hpp"

#include <algorithm>
#include <unordered_set>

namespace pathfusion {

namespace {

// [g_l] followed by the original letters from position l on.
PathWord with_geodesic_head(const PathWord& word, const std::vector<GroupWord>& prefixes, int l) {
  const auto head = prefixes[static_cast<std::size_t>(l)].letters();
  const auto tail = word.letters().subspan(static_cast<std::size_t>(l));
  std::vector<Letter> buf;
  buf.reserve(head.size() + tail.size());
  buf.insert(buf.end(), head.begin(), head.end());
  buf.insert(buf.end(), tail.begin(), tail.end());
  return PathWord(word.sig(), buf);
}

// [g][g^-1]: out along the geodesic and straight back.
PathWord geodesic_loop(const GroupWord& g) {
  return concat(shortest_path(g), shortest_path(invert(g)));
}

}  // namespace

bool check_relation_1(const PathWord& word, int l) {
  if (l < 1 || l > static_cast<int>(word.size()))
    throw DomainError("check_relation_1: l out of range");
  const auto prefixes = prefix_endpoints(word);
  const PathWord target = with_geodesic_head(word, prefixes, l);
  const PathWord left = geodesic_loop(prefixes[static_cast<std::size_t>(l) - 1]);
  const PathWord right = with_geodesic_head(word, prefixes, l - 1);
  return is_subobject(target, left, right);
}

bool check_relation_2(const PathWord& word, int l) {
  if (l < 1 || l > static_cast<int>(word.size()))
    throw DomainError("check_relation_2: l out of range");
  const auto prefixes = prefix_endpoints(word);
  const PathWord x = with_geodesic_head(word, prefixes, l);
  return is_subobject(geodesic_loop(prefixes[static_cast<std::size_t>(l)]), x, conjugate(x));
}

bool check_final_chain(const PathWord& word) {
  const auto prefixes = prefix_endpoints(word);
  std::vector<PathWord> factors;
  factors.reserve(word.size() + 1);
  for (std::size_t l = 1; l <= word.size(); ++l) factors.push_back(geodesic_loop(prefixes[l]));
  factors.push_back(shortest_path(prefixes.back()));
  return tensor_many(factors).contains(word);
}

VerificationReport verify_theorem(Signature sig, std::span<const PathWord> generators,
                                  int cutoff, int radius, std::size_t max_set_size) {
  if (radius < 0) throw DomainError("verify_theorem: radius must be >= 0");
  if (radius > cutoff) throw DomainError("verify_theorem: radius must be <= cutoff");

  VerificationReport rep;
  rep.cutoff = cutoff;
  rep.radius = radius;

  const ClosureResult cl = closure(sig, generators, cutoff, max_set_size);
  rep.closure_saturated = cl.saturated;
  rep.closure_size = cl.set.size();

  const PairSpec pair = extract_pair(sig, generators);
  const IrrSet realized = realize(pair, radius);
  rep.realized_size = realized.size();

  // Merge walk over the two canonically sorted sides within ball(radius).
  const IrrSet closure_side = cl.set.restricted(radius);
  const auto& a = closure_side.words();
  const auto& b = realized.words();
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() || (ia < a.size() && canonical_order(a[ia], b[ib]) < 0)) {
      rep.witnesses.push_back(a[ia++]);
    } else if (ia == a.size() || canonical_order(b[ib], a[ia]) < 0) {
      rep.witnesses.push_back(b[ib++]);
    } else {
      ++ia;
      ++ib;
    }
  }
  rep.agreement_radius =
      rep.witnesses.empty()
          ? radius
          : std::min(radius, static_cast<int>(rep.witnesses.front().size()) - 1);

  for (const auto& w : cl.set.words()) {
    for (int l = 1; l <= static_cast<int>(w.size()); ++l) {
      ++rep.steps.relation1_checked;
      if (!check_relation_1(w, l)) ++rep.steps.relation1_failed;
      ++rep.steps.relation2_checked;
      if (!check_relation_2(w, l)) ++rep.steps.relation2_failed;
    }
  }
  for (const auto& w : realized.words()) {
    ++rep.steps.chain_checked;
    if (!check_final_chain(w)) ++rep.steps.chain_failed;
  }

  rep.pair_stable = pair_equal(extract_pair(sig, cl.set.words()), pair);
  return rep;
}

bool PropertyReport::passed() const noexcept {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

const PropertyCheck& PropertyReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw DomainError("PropertyReport: no check named " + name);
}

PropertySuiteConfig PropertySuiteConfig::clamped(int radius) {
  if (radius < 0) throw DomainError("PropertySuiteConfig: radius must be >= 0");
  PropertySuiteConfig cfg;
  for (int* r : {&cfg.unit_radius, &cfg.frobenius_exhaustive_radius, &cfg.frobenius_sample_radius,
                 &cfg.associativity_radius, &cfg.multiplicity_radius, &cfg.vertex_radius,
                 &cfg.endpoint_radius, &cfg.conjugate_sample_radius})
    *r = std::min(*r, radius);
  return cfg;
}

namespace {

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) noexcept { return n <= 1 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

PathWord sample_word(SplitMix& rng, Signature sig, int radius) {
  const std::uint64_t alphabet = 2 * static_cast<std::uint64_t>(sig.rank());
  std::uint64_t idx = rng.below(ball_size(sig, radius));
  std::uint64_t level = 1;
  int len = 0;
  while (idx >= level) {
    idx -= level;
    level *= alphabet;
    ++len;
  }
  std::vector<Letter> buf(static_cast<std::size_t>(len), Letter(1, 1));
  for (int i = len - 1; i >= 0; --i) {
    buf[static_cast<std::size_t>(i)] = Letter::from_code(static_cast<std::uint32_t>(idx % alphabet));
    idx /= alphabet;
  }
  return PathWord(sig, buf);
}

// Half the samples draw z uniformly; the other half draw z from the terms
// of tensor(x, y) so the positive direction is exercised as well.
PathWord sample_candidate(SplitMix& rng, Signature sig, int radius, const PathWord& x,
                          const PathWord& y, bool biased) {
  if (!biased) return sample_word(rng, sig, radius);
  const FusionTerms t = tensor(x, y);
  std::uint64_t pick = rng.below(t.size());
  for (const auto& [term, mult] : t) {
    (void)mult;
    if (pick-- == 0) return term;
  }
  return x;  // unreachable
}

void record_failure(PropertyCheck& check, const std::string& counterexample) {
  if (check.failures++ == 0) check.first_counterexample = counterexample;
}

PropertyCheck check_unit_law(Signature sig, int radius) {
  PropertyCheck check;
  check.name = "unit_law";
  const PathWord unit(sig);
  for (const auto& e : enumerate_ball(sig, radius)) {
    ++check.cases;
    FusionTerms expected;
    expected.add(e);
    if (tensor(unit, e) != expected || tensor(e, unit) != expected)
      record_failure(check, "e=" + e.str());
  }
  return check;
}

bool frobenius_holds(const PathWord& x, const PathWord& y, const PathWord& z) {
  const bool direct = is_subobject(z, x, y);
  return direct == is_subobject(x, z, conjugate(y)) &&
         direct == is_subobject(y, conjugate(x), z);
}

PropertyCheck check_frobenius_exhaustive(Signature sig, int radius) {
  PropertyCheck check;
  check.name = "frobenius_exhaustive";
  const auto ball = enumerate_ball(sig, radius);
  for (const auto& x : ball)
    for (const auto& y : ball)
      for (const auto& z : ball) {
        ++check.cases;
        if (!frobenius_holds(x, y, z))
          record_failure(check, "x=" + x.str() + " y=" + y.str() + " z=" + z.str());
      }
  return check;
}

PropertyCheck check_frobenius_sampled(Signature sig, int radius, std::uint64_t samples,
                                      SplitMix& rng) {
  PropertyCheck check;
  check.name = "frobenius_sampled";
  for (std::uint64_t i = 0; i < samples; ++i) {
    const PathWord x = sample_word(rng, sig, radius);
    const PathWord y = sample_word(rng, sig, radius);
    const PathWord z = sample_candidate(rng, sig, radius, x, y, i % 2 == 1);
    ++check.cases;
    if (!frobenius_holds(x, y, z))
      record_failure(check, "x=" + x.str() + " y=" + y.str() + " z=" + z.str());
  }
  return check;
}

PropertyCheck check_associativity(Signature sig, int radius, std::uint64_t samples,
                                  SplitMix& rng) {
  PropertyCheck check;
  check.name = "associativity";
  for (std::uint64_t i = 0; i < samples; ++i) {
    const PathWord x = sample_word(rng, sig, radius);
    const PathWord y = sample_word(rng, sig, radius);
    const PathWord z = sample_word(rng, sig, radius);
    ++check.cases;
    const PathWord factors[] = {x, y, z};
    const FusionTerms left = tensor_many(factors);
    FusionTerms right;
    for (const auto& [t, mult] : tensor(y, z)) {
      const std::uint64_t m = mult;
      for_each_term_raw(x, t,
                        [&](std::span<const Letter> term) { right.add(PathWord(sig, term), m); });
    }
    if (left != right)
      record_failure(check, "x=" + x.str() + " y=" + y.str() + " z=" + z.str());
  }
  return check;
}

PropertyCheck check_multiplicity_free(Signature sig, int radius) {
  PropertyCheck check;
  check.name = "multiplicity_free";
  const auto ball = enumerate_ball(sig, radius);
  for (const auto& e : ball)
    for (const auto& f : ball) {
      ++check.cases;
      const std::size_t depth = strip_depth(e, f);
      const FusionTerms t = tensor(e, f);
      bool ok = t.size() == depth + 1;
      // canonical order is length-major, so term i must have length
      // |e| + |f| - 2(depth - i); that forces pairwise distinct lengths
      std::size_t i = 0;
      for (const auto& [term, mult] : t) {
        ok = ok && mult == 1 && term.size() == e.size() + f.size() - 2 * (depth - i);
        ++i;
      }
      if (!ok) record_failure(check, "e=" + e.str() + " f=" + f.str());
    }
  return check;
}

PropertyCheck check_vertex_monotonicity(Signature sig, int radius) {
  PropertyCheck check;
  check.name = "vertex_monotonicity";
  const auto ball = enumerate_ball(sig, radius);
  for (const auto& e : ball)
    for (const auto& f : ball) {
      ++check.cases;
      const auto base = vertices(concat(e, f));
      const std::unordered_set<GroupWord> allowed(base.begin(), base.end());
      bool ok = true;
      for (const auto& [term, mult] : tensor(e, f)) {
        (void)mult;
        for (const auto& v : prefix_endpoints(term)) ok = ok && allowed.count(v) != 0;
      }
      if (!ok) record_failure(check, "e=" + e.str() + " f=" + f.str());
    }
  return check;
}

PropertyCheck check_endpoint_constancy(Signature sig, int radius) {
  PropertyCheck check;
  check.name = "endpoint_constancy";
  const auto ball = enumerate_ball(sig, radius);
  for (const auto& e : ball)
    for (const auto& f : ball) {
      ++check.cases;
      const GroupWord expected = multiply(endpoint(e), endpoint(f));
      bool ok = true;
      for (const auto& [term, mult] : tensor(e, f)) {
        (void)mult;
        ok = ok && endpoint(term) == expected;
      }
      if (!ok) record_failure(check, "e=" + e.str() + " f=" + f.str());
    }
  return check;
}

PropertyCheck check_conjugate_antimultiplicativity(Signature sig, int radius,
                                                   std::uint64_t samples, SplitMix& rng) {
  PropertyCheck check;
  check.name = "conjugate_antimultiplicativity";
  for (std::uint64_t i = 0; i < samples; ++i) {
    const PathWord x = sample_word(rng, sig, radius);
    const PathWord y = sample_word(rng, sig, radius);
    const PathWord z = sample_candidate(rng, sig, radius, x, y, i % 2 == 1);
    ++check.cases;
    if (is_subobject(z, x, y) != is_subobject(conjugate(z), conjugate(y), conjugate(x)))
      record_failure(check, "x=" + x.str() + " y=" + y.str() + " z=" + z.str());
  }
  return check;
}

}  // namespace

PropertyReport run_property_suite(Signature sig, const PropertySuiteConfig& config,
                                  std::uint64_t seed) {
  SplitMix rng(seed);
  PropertyReport report;
  report.seed = seed;
  report.checks.push_back(check_unit_law(sig, config.unit_radius));
  report.checks.push_back(check_frobenius_exhaustive(sig, config.frobenius_exhaustive_radius));
  report.checks.push_back(
      check_frobenius_sampled(sig, config.frobenius_sample_radius, config.frobenius_samples, rng));
  report.checks.push_back(
      check_associativity(sig, config.associativity_radius, config.associativity_samples, rng));
  report.checks.push_back(check_multiplicity_free(sig, config.multiplicity_radius));
  report.checks.push_back(check_vertex_monotonicity(sig, config.vertex_radius));
  report.checks.push_back(check_endpoint_constancy(sig, config.endpoint_radius));
  report.checks.push_back(check_conjugate_antimultiplicativity(
      sig, config.conjugate_sample_radius, config.conjugate_samples, rng));
  return report;
}

PropertyReport run_property_suite(Signature sig, int radius, std::uint64_t seed) {
  return run_property_suite(sig, PropertySuiteConfig::clamped(radius), seed);
}

}  // namespace pathfusion
