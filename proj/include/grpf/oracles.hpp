#pragma once

#include <map>
#include <vector>

#include "grpf/weights.hpp"

// Brute-force references kept apart from the code paths they check.
namespace grpf::oracle {

/// Number of semistandard tableaux of shape lambda and content alpha, by direct filling.
BigInt kostka(const Partition& lambda, const std::vector<int>& content);

/// Coefficients c^nu of s_lambda s_mu for l(nu) <= nvars, from the monomial
/// expansion of the product in nvars variables.
std::map<Partition, BigInt> schur_product(const Partition& lambda, const Partition& mu, int nvars);

}  // namespace grpf::oracle
