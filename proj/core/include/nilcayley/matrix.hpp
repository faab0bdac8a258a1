#pragma once

#include <cstdint>
#include <sstream>
#include <vector>

#include "nilcayley/ideals.hpp"
#include "nilcayley/ring.hpp"

namespace nilcayley {

/// Square matrix over a ring backend. Entries are stored row-major; all
/// entries must come from one backend (enforced by the element types).
template <typename E>
class RingMatrix {
public:
  RingMatrix(std::size_t n, std::vector<E> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) throw ring_error("matrix: entry count mismatch");
    if (n_ == 0) throw ring_error("matrix: empty");
  }

  std::size_t size() const { return n_; }
  const E& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  E& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<E>& entries() const { return entries_; }

private:
  std::size_t n_;
  std::vector<E> entries_;
};

template <RingBackend B>
RingMatrix<typename B::Element> mat_filled(const B& ring, std::size_t n) {
  return RingMatrix<typename B::Element>(n, std::vector<typename B::Element>(n * n, ring.zero()));
}

template <RingBackend B>
RingMatrix<typename B::Element> mat_identity(const B& ring, std::size_t n) {
  auto m = mat_filled(ring, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

template <RingBackend B>
RingMatrix<typename B::Element> mat_add(const B& ring, const RingMatrix<typename B::Element>& a,
                                        const RingMatrix<typename B::Element>& b) {
  if (a.size() != b.size()) throw ring_error("matrix add: size mismatch");
  auto out = mat_filled(ring, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
  return out;
}

template <RingBackend B>
RingMatrix<typename B::Element> mat_sub(const B& ring, const RingMatrix<typename B::Element>& a,
                                        const RingMatrix<typename B::Element>& b) {
  if (a.size() != b.size()) throw ring_error("matrix sub: size mismatch");
  auto out = mat_filled(ring, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.at(i, j) = ring.sub(a.at(i, j), b.at(i, j));
  return out;
}

template <RingBackend B>
RingMatrix<typename B::Element> mat_neg(const B& ring, const RingMatrix<typename B::Element>& a) {
  auto out = mat_filled(ring, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.at(i, j) = ring.neg(a.at(i, j));
  return out;
}

template <RingBackend B>
RingMatrix<typename B::Element> mat_mul(const B& ring, const RingMatrix<typename B::Element>& a,
                                        const RingMatrix<typename B::Element>& b) {
  if (a.size() != b.size()) throw ring_error("matrix mul: size mismatch");
  const std::size_t n = a.size();
  auto out = mat_filled(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      typename B::Element acc = ring.zero();
      for (std::size_t l = 0; l < n; ++l) acc = ring.add(acc, ring.mul(a.at(i, l), b.at(l, j)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

template <RingBackend B>
RingMatrix<typename B::Element> mat_scale(const B& ring, const Rational& q,
                                          const RingMatrix<typename B::Element>& a) {
  auto out = mat_filled(ring, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.at(i, j) = ring.scale(q, a.at(i, j));
  return out;
}

/// Entrywise a_ij * e: the matrix A with a ring coefficient on the right.
template <RingBackend B>
RingMatrix<typename B::Element> mat_mul_elem_right(const B& ring,
                                                   const RingMatrix<typename B::Element>& a,
                                                   const typename B::Element& e) {
  auto out = mat_filled(ring, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.at(i, j) = ring.mul(a.at(i, j), e);
  return out;
}

template <RingBackend B>
RingMatrix<typename B::Element> mat_mul_elem_left(const B& ring, const typename B::Element& e,
                                                  const RingMatrix<typename B::Element>& a) {
  auto out = mat_filled(ring, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.at(i, j) = ring.mul(e, a.at(i, j));
  return out;
}

/// A^e by repeated multiplication; A^0 = I.
template <RingBackend B>
RingMatrix<typename B::Element> mat_pow(const B& ring, RingMatrix<typename B::Element> a,
                                        std::uint32_t e) {
  auto acc = mat_identity(ring, a.size());
  while (e > 0) {
    if (e & 1u) acc = mat_mul(ring, acc, a);
    e >>= 1u;
    if (e > 0) a = mat_mul(ring, a, a);
  }
  return acc;
}

template <RingBackend B>
typename B::Element mat_trace(const B& ring, const RingMatrix<typename B::Element>& a) {
  typename B::Element acc = ring.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = ring.add(acc, a.at(i, i));
  return acc;
}

template <RingBackend B>
bool mat_equal(const B& ring, const RingMatrix<typename B::Element>& a,
               const RingMatrix<typename B::Element>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!ring.equal(a.at(i, j), b.at(i, j))) return false;
  return true;
}

template <RingBackend B>
bool mat_is_zero(const B& ring, const RingMatrix<typename B::Element>& a) {
  for (const auto& e : a.entries())
    if (!ring.is_zero(e)) return false;
  return true;
}

template <RingBackend B>
std::string mat_to_string(const B& ring, const RingMatrix<typename B::Element>& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i == 0 ? "[" : ",[");
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j > 0) os << ", ";
      os << ring.to_string(a.at(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

/// Entrywise projection into a quotient algebra.
inline RingMatrix<AlgebraElement> matrix_image(const QuotientAlgebra& q,
                                               const RingMatrix<AlgebraElement>& a) {
  std::vector<AlgebraElement> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) entries.push_back(q.project(e));
  return RingMatrix<AlgebraElement>(a.size(), std::move(entries));
}

/// Deterministic random matrix with independently sampled entries.
template <RingBackend B>
RingMatrix<typename B::Element> sample_matrix(const B& ring, std::size_t n,
                                              const SampleSpec& spec) {
  std::vector<typename B::Element> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    SampleRng rng(SampleRng::mix(spec.seed, 0x9000 + i));
    entries.push_back(sample_element(ring, spec, rng));
  }
  return RingMatrix<typename B::Element>(n, std::move(entries));
}

}  // namespace nilcayley
