#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "spinlie/errors.hpp"

namespace spinlie {

// An n-site tensor product of {I,X,Y,Z} in the symplectic bit-pair encoding:
// site q carries (x,z) = (0,0) I, (1,0) X, (1,1) Y, (0,1) Z. Site 0 is the
// lowest bit and the leftmost letter of the text label. All strings here are
// the Hermitian representatives; phases live in the arithmetic, not the type.
struct PauliString {
  std::uint32_t n = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  static constexpr std::uint32_t kMaxSites = 32;

  PauliString() = default;
  PauliString(std::uint32_t sites, std::uint64_t xbits, std::uint64_t zbits);

  static PauliString identity(std::uint32_t sites) { return PauliString(sites, 0, 0); }
  // Single-letter string, e.g. single_site(3, 'Y', 1) = IYI on three sites.
  static PauliString single_site(std::uint32_t sites, char letter, std::uint32_t site);
  static PauliString from_label(const std::string& label);

  bool is_identity() const { return (x | z) == 0; }
  int weight() const { return std::popcount(x | z); }
  char letter(std::uint32_t site) const;
  std::string label() const;

  // Canonical term ordering: lexicographic on (z,x).
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.x <=> b.x;
  }
  friend bool operator==(const PauliString&, const PauliString&) = default;

  // Dense coordinate in [0, 4^n): identity maps to 0.
  std::uint64_t key() const { return (z << n) | x; }
};

void require_same_sites(const PauliString& a, const PauliString& b);

// Even symplectic form <=> the strings commute.
bool commutes(const PauliString& a, const PauliString& b);

// P(a)*P(b) = i^phase * P(c) with phase in {0,1,2,3}.
struct PauliProduct {
  PauliString string;
  int phase;  // power of i, mod 4
};
PauliProduct multiply(const PauliString& a, const PauliString& b);

// [A,B] = i*scale*C for anticommuting Hermitian strings, scale in {+2,-2};
// nullopt when the strings commute.
struct BracketTerm {
  PauliString string;
  int scale;
};
std::optional<BracketTerm> bracket(const PauliString& a, const PauliString& b);

}  // namespace spinlie
