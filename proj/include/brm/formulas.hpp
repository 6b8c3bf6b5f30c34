#pragma once

// Closed forms for the action of 1-shifts and of the transposition-like words
//   first family  s = s_k ... s_{j-2} s_{j-1} s_{j-2} ... s_i
//   dual family   s = s_{k-1} ... s_{i+1} s_i s_{i+1} ... s_{j-1}
// as ratios of sigma, sigma-bar and Omega polynomials.
//
// "Down" is s_{j-1}...s_i and "up" is s_i...s_{j-1}.  Words returned here use
// the acting order of apply_word (leftmost letter first).

#include "brm/factored.hpp"
#include "brm/rmatrix.hpp"

namespace brm {

enum class Shift { Down, Up };
enum class Family { First, Dual };

Word oneshift_word(int i, int j, Shift dir);
Word family_word(int i, int j, int k, Family fam);
Word conjugate_word(int i, int j);  // s_i..s_{j-2} s_{j-1} s_{j-2}..s_i

// Down: kappa_r(s_{j-2}..s_i(x_{j-1}), x_j).  Up: kappa_r(x_i, s_{i+1}..s_{j-1}(x_{i+1})).
FactoredRational oneshift_kappa(int n, int i, int j, long long r, Shift dir);
// Entry (target, r) after the 1-shift.  Down allows i <= target <= j, up allows
// i <= target <= j as well (target = j, resp. i, is the extremal formula).
FactoredRational oneshift_action(int n, int i, int j, int target, long long r, Shift dir);

// i < k < j
FactoredRational trans_kappa(int n, int i, int j, int k, long long r);
FactoredRational trans_kappa_dual(int n, int i, int j, int k, long long r);
// first family, i <= k < j: entry (k, r)
FactoredRational trans_action(int n, int i, int j, int k, long long r);
// dual family, i < k <= j: entry (k, r)
FactoredRational trans_action_dual(int n, int i, int j, int k, long long r);
// conjugate word, i < k < j: entry (k, r)
FactoredRational trans_conjugate(int n, int i, int j, int k, long long r);

// Whole tuple after the family word, assembled only from closed forms.
// First: i <= k < j.  Dual: i < k <= j.  Both need i < j-1.
Tuple<FactoredRational> full_action(int n, int m, int i, int j, int k, Family fam);

}  // namespace brm
