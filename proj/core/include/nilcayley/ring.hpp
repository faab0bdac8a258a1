#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilcayley/rational.hpp"

namespace nilcayley {

/// The contract every ring backend implements: an associative unital ring
/// with an exact Q-action, canonical equality, a finite generating family
/// used for random sampling, and a canonical textual rendering.
template <typename B>
concept RingBackend = requires(const B& ring, const typename B::Element& a,
                               const typename B::Element& b, const Rational& q,
                               const std::string& sym) {
  typename B::Element;
  { ring.zero() } -> std::convertible_to<typename B::Element>;
  { ring.one() } -> std::convertible_to<typename B::Element>;
  { ring.add(a, b) } -> std::convertible_to<typename B::Element>;
  { ring.sub(a, b) } -> std::convertible_to<typename B::Element>;
  { ring.neg(a) } -> std::convertible_to<typename B::Element>;
  { ring.mul(a, b) } -> std::convertible_to<typename B::Element>;
  { ring.scale(q, a) } -> std::convertible_to<typename B::Element>;
  { ring.is_zero(a) } -> std::convertible_to<bool>;
  { ring.equal(a, b) } -> std::convertible_to<bool>;
  { ring.generators() } -> std::convertible_to<std::vector<typename B::Element>>;
  { ring.symbol(sym) } -> std::convertible_to<std::optional<typename B::Element>>;
  { ring.to_string(a) } -> std::convertible_to<std::string>;
  { ring.name() } -> std::convertible_to<std::string>;
};

/// Embeds a rational scalar as q * 1.
template <RingBackend B>
typename B::Element embed(const B& ring, const Rational& q) {
  return ring.scale(q, ring.one());
}

/// Additive commutator [a, b] = ab - ba.
template <RingBackend B>
typename B::Element commutator(const B& ring, const typename B::Element& a,
                               const typename B::Element& b) {
  return ring.sub(ring.mul(a, b), ring.mul(b, a));
}

/// Left-normed commutator [x1,...,xk] = [...[[x1,x2],x3],...,xk].
template <RingBackend B>
typename B::Element left_normed(const B& ring, const std::vector<typename B::Element>& xs) {
  if (xs.empty()) throw ring_error("left_normed: empty argument list");
  typename B::Element acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = commutator(ring, acc, xs[i]);
  return acc;
}

/// n-th power by repeated squaring; e = 0 gives 1.
template <RingBackend B>
typename B::Element ring_pow(const B& ring, typename B::Element a, std::uint32_t e) {
  typename B::Element acc = ring.one();
  while (e > 0) {
    if (e & 1u) acc = ring.mul(acc, a);
    e >>= 1u;
    if (e > 0) a = ring.mul(a, a);
  }
  return acc;
}

/// Deterministic sampling parameters. Identical SampleSpec (plus identical
/// backend) always yields identical elements.
struct SampleSpec {
  std::uint64_t seed = 0;
  int term_count = 3;
  long coefficient_bound = 5;
  bool degree_bias = true;  // favor short generator products
};

/// Seeded RNG with portable bounded draws.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform-ish integer in [lo, hi] (inclusive); modulo bias is irrelevant
  /// at the tiny ranges used here, and the stream is fully deterministic.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  std::uint64_t raw() { return eng_(); }

  /// Independent substream for trial derivation.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 eng_;
};

/// Sparse random element: a sum of spec.term_count terms, each a rational
/// coefficient times a product of at most three generators.
template <RingBackend B>
typename B::Element sample_element(const B& ring, const SampleSpec& spec, SampleRng& rng) {
  const std::vector<typename B::Element> gens = ring.generators();
  typename B::Element acc = ring.zero();
  for (int t = 0; t < spec.term_count; ++t) {
    long num = rng.uniform(1, std::max<long>(1, spec.coefficient_bound));
    if (rng.uniform(0, 1) == 1) num = -num;
    const long den = rng.uniform(0, 3) == 0 ? 2 : 1;
    const Rational coeff(num, den);

    const long len = spec.degree_bias ? (rng.uniform(0, 9) < 4 ? 1 : (rng.uniform(0, 1) ? 2 : (rng.uniform(0, 2) ? 3 : 0)))
                                      : rng.uniform(0, 3);
    typename B::Element term = ring.one();
    for (long i = 0; i < len && !gens.empty(); ++i) {
      std::size_t gi;
      if (spec.degree_bias && gens.size() > 4) {
        // Bias toward the front of the generating family.
        const std::size_t half = gens.size() / 2;
        gi = rng.uniform(0, 2) ? static_cast<std::size_t>(rng.uniform(0, static_cast<long>(half - 1)))
                               : static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gens.size() - 1)));
      } else {
        gi = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gens.size() - 1)));
      }
      term = ring.mul(term, gens[gi]);
    }
    acc = ring.add(acc, ring.scale(coeff, term));
  }
  return acc;
}

template <RingBackend B>
typename B::Element sample_element(const B& ring, const SampleSpec& spec) {
  SampleRng rng(spec.seed);
  return sample_element(ring, spec, rng);
}

/// Outcome of a randomized Lie-nilpotency falsification check.
template <typename Element>
struct LieNilpotencyReport {
  bool holds = true;
  std::vector<Element> witness;  // a (k+1)-tuple with nonzero left-normed commutator
};

/// Samples `trials` (k+1)-tuples and tests the left-normed vanishing identity
/// of Lie nilpotency index k. Falsification only: a pass is evidence, not proof.
template <RingBackend B>
LieNilpotencyReport<typename B::Element> is_lie_nilpotent_sampled(const B& ring, int k,
                                                                  const SampleSpec& spec,
                                                                  int trials) {
  if (k < 1) throw ring_error("is_lie_nilpotent_sampled: k must be >= 1");
  if (trials < 1) throw ring_error("is_lie_nilpotent_sampled: trials must be >= 1");
  LieNilpotencyReport<typename B::Element> report;
  for (int t = 0; t < trials; ++t) {
    SampleRng rng(SampleRng::mix(spec.seed, static_cast<std::uint64_t>(t)));
    std::vector<typename B::Element> tuple;
    tuple.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) tuple.push_back(sample_element(ring, spec, rng));
    if (!ring.is_zero(left_normed(ring, tuple))) {
      report.holds = false;
      report.witness = std::move(tuple);
      return report;
    }
  }
  return report;
}

/// The field Q as a ring backend.
class RationalRing {
public:
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element scale(const Rational& q, const Element& a) const { return q * a; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::vector<Element> generators() const { return {Rational(1)}; }
  std::optional<Element> symbol(const std::string&) const { return std::nullopt; }
  std::string to_string(const Element& a) const { return a.str(); }
  std::string name() const { return "rational"; }
};

static_assert(RingBackend<RationalRing>);

}  // namespace nilcayley
