#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binvert/families.hpp"
#include "binvert/kernel.hpp"

namespace binvert {

// Both sides of an exact identity check. `holds` is lhs == rhs.
struct IdentityResult {
  std::string name;
  std::vector<std::int64_t> parameters;
  ExactInt lhs;
  ExactInt rhs;
  bool holds = false;
};

// c_1(n,k) for f_0(n) = C(a, n-1): C(ak, n-k).
ExactInt c1_row(int a, int n, int k);

// c_1(n,k) for f_0(n) = C(n+a-2, a-1): C(n+ak-k-1, ak-1).
ExactInt c1_diagonal(int a, int n, int k);

// c_1(n,k) for f_0(n) = C(2n-2, n-1):
// 1 if k = n, else 2^{n-k} k(k+2)...(k+2(n-k-1)) / (n-k)!.
ExactInt c1_central(int n, int k);

// c_1(n,k) for f_0(n) = C(2n-1, n):
// 2^{n-k}/n! * sum_{i=0}^{k} (-1)^{k-i} C(k,i) i(i+2)...(i+2n-2).
ExactInt c1_central_adjacent(int n, int k);

// Closed form for whichever named family `spec` is; throws for Custom.
ExactInt c1_closed_form(const FamilySpec& spec, int n, int k);

// C(u,v) = sum_{i=w}^{u-v+w} C(i-1,w-1) C(u-i,v-w), u >= v >= w >= 1.
IdentityResult identity_idd1(int u, int v, int w);

// prod_{i=1}^{n} (n+i) = 2^n (2n-1)!!
IdentityResult identity_double_factorial(int n);

// prod_{i=1}^{n} (n+i-1) = 2^{n-1} (2n-1)!!
IdentityResult identity_shifted_double_factorial(int n);

// sum_{i=0}^{k} (-1)^{k-i} C(k,i) i(i+2)...(i+2j-2) = 0 for 0 <= j < k.
IdentityResult identity_vanishing(int k, int j);

// c1_central(n,2) = 4^{n-2}, n >= 2.
IdentityResult power_of_four_check(int n);

}  // namespace binvert
