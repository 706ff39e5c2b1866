#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ied {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Number of partitions of [n] into i nonempty blocks. 0 <= i <= n <= 64.
BigInt stirling2(int n, int i);

// Ordered Bell / Fubini number f_n = sum_i i! * S(n, i). 0 <= n <= 64.
BigInt fubini(int n);

// q_1 = 1, q_i = i/(i-1) * (i-1)^(1/i).
double q(int i);

// Smallest list size guaranteeing a list coloring distinguishing intersecting
// edges, for a k-uniform hypergraph with max degree <= delta and difference
// spectrum I. Empty I gives the degenerate bound.
int bound_ieds(int k, int delta, const std::vector<int>& spectrum);
int bound_iedm(int k, int delta, const std::vector<int>& spectrum);
int bound_sequences(int k, int delta, const std::vector<int>& spectrum, int pi);

// Closed forms for the regular-graph special cases: edge labelings of a
// k-regular graph distinguishing neighbors by sets (edge_sets) or multisets
// (edge_multisets), and total labelings likewise; general-position line families
// and (v,b,k,r)-configurations; sequence labelings of lines and regular graphs.
int closed_form_edge_sets(int k);        // ceil(2 + (k-1)/(k-2) (8(k-1)(k-2) f_{k-1})^{1/(k-1)})
int closed_form_total_sets(int k);       // ceil(2 + k/(k-1) (8k(k-1) f_k)^{1/k})
int closed_form_edge_multisets(int k);   // ceil(2 + (k-1)/(k-2) (2(k-1)(k-2)(k-1)!)^{1/(k-1)})
int closed_form_total_multisets(int k);  // ceil(2 + k/(k-1) (2k(k-1) k!)^{1/k})
int closed_form_configuration_sets(int k, int r);
int closed_form_configuration_multisets(int k, int r);
int closed_form_graph_sequences(int k);  // 1 + floor((k-1)/(k-2) (2k^2-4k)^{1/(k-1)})
int closed_form_lines_sequences(int k);  // 1 + floor((k-1)/(k-2) (4k^2-8k)^{1/(k-1)})

struct ThresholdCheck {
    std::string name;
    int k = 0;
    int bound = 0;
    // The linear cap bound <= (percent/100) * k, compared exactly in integers.
    int percent = 0;
    bool holds = false;
};

// Evaluates each special-case closed form at the uniformity where it first
// drops below a linear cap, comparing with exact integer arithmetic.
std::vector<ThresholdCheck> special_case_threshold_checks();

namespace detail {
BigInt factorial_big(int n);
BigInt fubini_big(int n);   // no range cap; exact
BigInt stirling2_big(int n, int i);
}  // namespace detail

}  // namespace ied
