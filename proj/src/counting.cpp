#include "chandas/counting.hpp"

#include "chandas/binomial.hpp"
#include "chandas/errors.hpp"

namespace chandas {

char token_digit(SankhyaToken token) {
  return token == SankhyaToken::Halve ? '2' : '0';
}

std::vector<SankhyaToken> sankhya_reduction(std::uint64_t n) {
  std::vector<SankhyaToken> tokens;
  while (n > 0) {
    if (n % 2 == 0) {
      tokens.push_back(SankhyaToken::Halve);
      n /= 2;
    } else {
      tokens.push_back(SankhyaToken::DecrementOne);
      n -= 1;
    }
  }
  return tokens;
}

SankhyaTrace sankhya_pingala(std::uint64_t n) {
  SankhyaTrace trace;
  trace.input = n;
  trace.tokens = sankhya_reduction(n);
  trace.replay.reserve(trace.tokens.size());
  Natural v = 1;
  for (auto it = trace.tokens.rbegin(); it != trace.tokens.rend(); ++it) {
    if (*it == SankhyaToken::Halve) {
      v *= v;
    } else {
      v *= 2;
    }
    trace.replay.push_back(v);
  }
  trace.result = std::move(v);
  return trace;
}

Natural sankhya_kedara_lagakriya(unsigned n) {
  if (n == 0) throw InvalidArgs("syllable count must be at least 1");
  Natural total = 0;
  for (const Natural& count : lagakriya(n)) total += count;
  return total;
}

Natural sankhya_kedara_uddishta(unsigned n) {
  if (n == 0) throw InvalidArgs("syllable count must be at least 1");
  Natural total = 0;
  Natural weight = 1;
  for (unsigned i = 0; i < n; ++i) {
    total += weight;
    weight *= 2;
  }
  return total + 1;
}

Natural adhvayoga(std::uint64_t n) {
  if (n == 0) throw InvalidArgs("syllable count must be at least 1");
  return sankhya_pingala(n).result * 2 - 2;
}

}  // namespace chandas
