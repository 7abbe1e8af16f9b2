#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qrr::partitions {

/* Weakly decreasing positive parts. */
using Partition = std::vector<int>;

/* Enumerate every partition of the given weight (weight 0 yields the empty
 * partition). Deliberately naive recursive descent: this module is the
 * combinatorial oracle and shares no code with the series engine. */
void for_each_partition(int weight, const std::function<void(const Partition&)>& visit);

/* Number of partitions of n into exactly `parts` parts with largest part
 * exactly `largest`, counted by exhaustive enumeration. */
std::int64_t count_partitions(int n, int parts, int largest);

/* Total number of partitions of n. */
std::int64_t count_all_partitions(int n);

/* The maximal Durfee rectangle of shape n x (sn+k): either k = 0 with the
 * rectangle holding n rows, or 1 <= k <= s-1 with n+1 rows. Exactly one class
 * fits any partition; classify() asserts that. */
struct DurfeeClass {
    int n = 0;
    int k = 0;
    friend bool operator==(const DurfeeClass&, const DurfeeClass&) = default;
};

DurfeeClass classify_durfee(const Partition& p, int s);

struct OracleReport {
    std::string name;
    bool pass = false;
    std::int64_t cases_checked = 0;
    std::string detail;
};

/* Coefficients of all three series forms of the two-parameter partition
 * generating identity against exhaustive (n, parts, largest) counts. */
OracleReport verify_thm31_coefficients(int s, int max_weight);

/* Durfee-rectangle classification: exhaustive and exclusive over all weights
 * <= max_n, and per-class counts match the class generating functions. */
OracleReport verify_durfee_rectangle(int s, int max_n);

/* Coefficients of sum_{n>=1} q^(n(n-1)/2) / (q^2;q^2)_n against counts of
 * partitions into distinct parts with odd gaps between consecutive parts. */
OracleReport verify_a179080(int max_weight);

}  // namespace qrr::partitions
