#include "spinlie/pauli.hpp"

#include <bit>

namespace spinlie {

PauliString::PauliString(std::uint32_t sites, std::uint64_t xbits, std::uint64_t zbits)
    : n(sites), x(xbits), z(zbits) {
  if (sites == 0 || sites > kMaxSites)
    throw InputError("pauli: site count must be in [1," + std::to_string(kMaxSites) + "]");
  const std::uint64_t mask = (sites == 64) ? ~0ull : ((1ull << sites) - 1);
  if ((xbits | zbits) & ~mask) throw InputError("pauli: bits outside the declared sites");
}

PauliString PauliString::single_site(std::uint32_t sites, char letter, std::uint32_t site) {
  if (site >= sites) throw InputError("pauli: site index out of range");
  std::uint64_t bx = 0, bz = 0;
  switch (letter) {
    case 'I': case 'i': break;
    case 'X': case 'x': bx = 1; break;
    case 'Y': case 'y': bx = 1; bz = 1; break;
    case 'Z': case 'z': bz = 1; break;
    default: throw InputError(std::string("pauli: unknown letter '") + letter + "'");
  }
  return PauliString(sites, bx << site, bz << site);
}

PauliString PauliString::from_label(const std::string& label) {
  if (label.empty()) throw InputError("pauli: empty label");
  PauliString p(static_cast<std::uint32_t>(label.size()), 0, 0);
  for (std::uint32_t q = 0; q < label.size(); ++q) {
    const PauliString s = single_site(p.n, label[q], q);
    p.x |= s.x;
    p.z |= s.z;
  }
  return p;
}

char PauliString::letter(std::uint32_t site) const {
  const bool bx = (x >> site) & 1, bz = (z >> site) & 1;
  return bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
}

std::string PauliString::label() const {
  std::string out(n, 'I');
  for (std::uint32_t q = 0; q < n; ++q) out[q] = letter(q);
  return out;
}

void require_same_sites(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw DimensionError("pauli: mismatched site counts");
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_sites(a, b);
  const int form = std::popcount(a.x & b.z) + std::popcount(a.z & b.x);
  return (form & 1) == 0;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  require_same_sites(a, b);
  const std::uint64_t cx = a.x ^ b.x, cz = a.z ^ b.z;
  // Sitewise, with P(x,z) := i^(x z) X^x Z^z: the i-exponent of the product is
  // xa za + xb zb - xc zc + 2 za xb, summed over sites.
  int phase = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) -
              std::popcount(cx & cz) + 2 * std::popcount(a.z & b.x);
  phase &= 3;
  return {PauliString(a.n, cx, cz), phase};
}

std::optional<BracketTerm> bracket(const PauliString& a, const PauliString& b) {
  if (commutes(a, b)) return std::nullopt;
  const PauliProduct p = multiply(a, b);
  // Anticommuting strings: [A,B] = 2AB = 2 i^phase C with phase odd.
  return BracketTerm{p.string, p.phase == 1 ? 2 : -2};
}

}  // namespace spinlie
