#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinlie/pauli.hpp"
#include "spinlie/scalar.hpp"

namespace spinlie {

// A sparse combination of Pauli strings over coefficients S (exact rationals
// by default, doubles in floating mode, complex doubles for the few places
// that need non-Hermitian operators). Terms are held sorted in the canonical
// (z,x) order with exact zeros purged, so iteration and hashing are
// deterministic. With real S the operator is Hermitian by construction; the
// skew-Hermitian element iH is represented by its H part throughout.
template <class S>
class PauliOp {
 public:
  using Term = std::pair<PauliString, S>;

  PauliOp() = default;
  explicit PauliOp(std::uint32_t sites) : n_(sites) {}

  static PauliOp term(const PauliString& p, S coeff) {
    PauliOp op(p.n);
    if (!scalar_traits<S>::is_zero(coeff)) op.terms_.push_back({p, std::move(coeff)});
    return op;
  }

  std::uint32_t sites() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  S coeff(const PauliString& p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const PauliString& q) { return t.first < q; });
    if (it != terms_.end() && it->first == p) return it->second;
    return S{};
  }

  S trace_coeff() const {
    if (!terms_.empty() && terms_.front().first.is_identity()) return terms_.front().second;
    return S{};
  }
  bool is_traceless() const { return scalar_traits<S>::is_zero(trace_coeff()); }

  // C - tr(C)/N * identity, with the normalized-basis convention the identity
  // coefficient already is tr/2^n.
  PauliOp traceless() const {
    PauliOp out = *this;
    if (!out.terms_.empty() && out.terms_.front().first.is_identity())
      out.terms_.erase(out.terms_.begin());
    return out;
  }

  void add_term(const PauliString& p, const S& coeff) {
    if (n_ == 0) n_ = p.n;
    if (p.n != n_) throw DimensionError("operator: term site count mismatch");
    if (scalar_traits<S>::is_zero(coeff)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const PauliString& q) { return t.first < q; });
    if (it != terms_.end() && it->first == p) {
      it->second += coeff;
      if (scalar_traits<S>::is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.insert(it, {p, coeff});
    }
  }

  PauliOp& operator+=(const PauliOp& o) { return merge(o, S(1)); }
  PauliOp& operator-=(const PauliOp& o) { return merge(o, S(-1)); }
  PauliOp& operator*=(const S& s) {
    if (scalar_traits<S>::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= s;
    }
    return *this;
  }

  friend PauliOp operator+(PauliOp a, const PauliOp& b) { return a += b; }
  friend PauliOp operator-(PauliOp a, const PauliOp& b) { return a -= b; }
  friend PauliOp operator*(const S& s, PauliOp a) { return a *= s; }

  friend bool operator==(const PauliOp& a, const PauliOp& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Deterministic total order, used to canonicalize candidate batches.
  friend bool operator<(const PauliOp& a, const PauliOp& b) {
    const std::size_t m = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
      if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
    }
    return a.terms_.size() < b.terms_.size();
  }

 private:
  PauliOp& merge(const PauliOp& o, const S& factor) {
    if (n_ == 0) n_ = o.n_;
    if (!o.terms_.empty() && o.n_ != n_) throw DimensionError("operator: site count mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        S v = o.terms_[j].second * factor;
        if (!scalar_traits<S>::is_zero(v)) out.push_back({o.terms_[j].first, std::move(v)});
        ++j;
      } else {
        S v = terms_[i].second + o.terms_[j].second * factor;
        if (!scalar_traits<S>::is_zero(v)) out.push_back({terms_[i].first, std::move(v)});
        ++i, ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::uint32_t n_ = 0;
  std::vector<Term> terms_;
};

using RatOp = PauliOp<Rat>;
using FloatOp = PauliOp<double>;
using CxOp = PauliOp<Cx>;

// K = i[A,B], the Hermitian operator with [iA,iB] = iK. Pairwise string
// brackets contribute -scale (i * i*scale*C = -scale*C).
template <class S>
PauliOp<S> bracket_op(const PauliOp<S>& a, const PauliOp<S>& b) {
  if (!a.is_zero() && !b.is_zero() && a.sites() != b.sites())
    throw DimensionError("bracket: site count mismatch");
  std::map<PauliString, S> acc;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      const auto br = bracket(pa, pb);
      if (!br) continue;
      S v = ca * cb * S(-br->scale);
      auto [it, fresh] = acc.try_emplace(br->string, v);
      if (!fresh) it->second += v;
    }
  PauliOp<S> out(a.sites());
  for (auto& [p, c] : acc)
    if (!scalar_traits<S>::is_zero(c)) out.add_term(p, c);
  return out;
}

// tr(A^dag B) / 2^n: the strings are an orthonormal basis under this pairing.
template <class S>
S hs_inner(const PauliOp<S>& a, const PauliOp<S>& b) {
  if (!a.is_zero() && !b.is_zero() && a.sites() != b.sites())
    throw DimensionError("hs_inner: site count mismatch");
  S sum{};
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia, ++ib;
    }
  }
  return sum;
}

FloatOp to_float(const RatOp& op);
CxOp to_complex(const RatOp& op);

// Text form of one term: coefficient then letters, e.g. "1.5 XIZ" with site 0
// leftmost. Rational coefficients accept "a/b"; the complex parser also takes
// a pure-imaginary coefficient written with a trailing 'i', e.g. "-0.5i Y".
std::pair<Rat, PauliString> parse_term(const std::string& text);
std::pair<Cx, PauliString> parse_term_complex(const std::string& text);
RatOp parse_op(const std::vector<std::string>& terms);
CxOp parse_op_complex(const std::vector<std::string>& terms);
std::string to_text(const RatOp& op);
std::string to_text(const FloatOp& op);

}  // namespace spinlie
