#pragma once

// Eisenstein cohomology formulas on A_g: terms of the dual BGG complex, their
// restriction to the codimension-one boundary, the rank-one formula, and the
// genus-two total / codimension-two / kernel formulas with cross-checks.

#include "eiscoh/glbranch.hpp"
#include "eiscoh/motivering.hpp"
#include "eiscoh/report.hpp"
#include "eiscoh/weylcomb.hpp"

#include <vector>

namespace eiscoh {

struct bgg_term {
  weyl_element w;
  gl_weight mu; // -sigma_1(w * lambda)
  int degree;   // length(w)
  int filtration;
};

struct boundary_term {
  weyl_element source_w;
  int k;
  side which;
  int position;        // w^{-1}(k) on side A, w^{-1}(2g+1-k) on side B
  int telescope_index; // g + 1 - position
  weyl_element u;      // restrict_final(source_w, k, which), in F_{g-1}
  gl_weight weight;    // genus g-1
  int sign;
  int twist; // 0 on side A, lambda_k + g + 1 - k on side B
  bool parity_pass;
};

// (lambda_1+1, ..., lambda_{k-1}+1, lambda_{k+1}, ..., lambda_g)
sp_weight tau_prime(const sp_weight& lambda, int k);

// The Eisenstein twist exponent lambda_k + g + 1 - k.
int twist_exponent(const sp_weight& lambda, int k);

// 2^g terms sorted by (degree, mu).
std::vector<bgg_term> bgg_complex(const sp_weight& lambda);

// g * 2^g terms, ordered by (w as in enumerate_final, k).
std::vector<boundary_term> boundary_terms(const sp_weight& lambda);

// Partition of the boundary double sum into side-A and side-B pieces:
// dichotomy, weight identity, sign constancy, and the two parity routes.
verification_report verify_partition(const sp_weight& lambda);

// The boundary terms are exactly the expanded telescopes of the BGG terms.
verification_report verify_reindexing(const sp_weight& lambda);

// Rank-one Eisenstein contribution:
//   sum_k (-1)^{k+1} Ec(g-1, tau'_k(lambda)) (1 - L^{lambda_k + g + 1 - k}).
// With expand, Ec(1, .) is rewritten through the cusp motives.
motive_expr rank1(const sp_weight& lambda, bool expand);

// Genus two, l >= m >= 0, l = m (mod 2); invalid_argument_error otherwise.
motive_expr total_g2(int l, int m);
motive_expr total_g2_alt(int l, int m);
motive_expr codim2_g2(int l, int m);
// Additionally requires l > m > 0.
motive_expr kernel_g2(int l, int m);

verification_report consistency_g2(int l, int m);

// dual(x) * L^weight == -x
bool check_duality(const motive_expr& x, int weight);

} // namespace eiscoh
