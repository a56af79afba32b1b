#include "chandas/oracle.hpp"

#include <algorithm>

#include "chandas/prastara.hpp"

namespace chandas::oracle {

std::vector<int> modern_to_binary(const Natural& v, unsigned width) {
  if (width == 0) throw InvalidArgs("binary width must be at least 1");
  if (v >= pow2(width))
    throw Overflow(v.str() + " does not fit in " + std::to_string(width) +
                   " bits");
  std::vector<int> bits(width, 0);
  Natural rest = v;
  for (unsigned i = width; i-- > 0;) {  // remainders, read in reverse
    bits[i] = rest % 2 == 0 ? 0 : 1;
    rest /= 2;
  }
  return bits;
}

std::vector<int> mirror_bridge(const GlSequence& seq) {
  std::vector<int> bits;
  bits.reserve(seq.size());
  for (std::size_t i = seq.size(); i-- > 0;)
    bits.push_back(seq[i] == Syllable::Laghu ? 1 : 0);
  return bits;
}

Natural ncr_factorial(unsigned n, unsigned r) {
  if (r > n)
    throw InvalidArgs("r = " + std::to_string(r) + " exceeds n = " +
                      std::to_string(n));
  const auto factorial = [](unsigned m) {
    Natural f = 1;
    for (unsigned i = 2; i <= m; ++i) f *= i;
    return f;
  };
  return factorial(n) / (factorial(r) * factorial(n - r));
}

Natural pow2_doubling(std::uint64_t n) {
  Natural p = 1;
  for (std::uint64_t i = 0; i < n; ++i) p *= 2;
  return p;
}

std::vector<RowIndex> brute_positions(unsigned n, unsigned r) {
  if (r > n)
    throw InvalidArgs("r = " + std::to_string(r) + " exceeds n = " +
                      std::to_string(n));
  std::vector<RowIndex> positions;
  PrastaraStream stream(n);
  Natural position = 0;
  while (auto row = stream.next()) {
    ++position;
    const auto laghus = static_cast<unsigned>(
        std::count(row->begin(), row->end(), Syllable::Laghu));
    if (laghus == r) positions.emplace_back(position);
  }
  return positions;
}

}  // namespace chandas::oracle
