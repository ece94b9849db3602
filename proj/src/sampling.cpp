#include "germsig/sampling.hpp"

namespace germsig {

SpMatrix random_symplectic(std::mt19937_64& rng, std::size_t g, int length) {
  std::uniform_int_distribution<int> entry(-1, 1);
  std::uniform_int_distribution<int> coin(0, 1);
  SpMatrix acc(g);
  for (int n = 0; n < length; ++n) {
    std::vector<Integer> c(2 * g);
    for (auto& x : c) x = entry(rng);
    acc = acc * transvection(c, coin(rng) ? 1 : -1);
  }
  return acc;
}

GeneratorWord random_word(std::mt19937_64& rng, int m, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> point(1, m);
  std::uniform_int_distribution<int> coin(0, 1);
  GeneratorWord w;
  const int n = len(rng);
  for (int k = 0; k < n; ++k) {
    int i = point(rng), j = point(rng);
    while (j == i) j = point(rng);
    if (i > j) std::swap(i, j);
    w.letters.push_back(Letter{Letter::Kind::kHalfTwist, i, j, coin(rng) ? 1 : -1});
  }
  return w;
}

}  // namespace germsig
