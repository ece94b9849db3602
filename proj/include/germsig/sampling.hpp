#pragma once

#include <random>

#include "germsig/coverrep.hpp"
#include "germsig/symplectic.hpp"

namespace germsig {

// Product of `length` random transvections along small integer vectors.
SpMatrix random_symplectic(std::mt19937_64& rng, std::size_t g, int length = 6);

// Uniform length in [0, max_length]; letters sigma_ij^{+-1} with i < j.
GeneratorWord random_word(std::mt19937_64& rng, int m, int max_length);

}  // namespace germsig
