#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "crgstir/colored.hpp"
#include "crgstir/qpoly.hpp"
#include "crgstir/stirling.hpp"

namespace crgstir {

class InvolutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class StepAction { Split, Merge, Fixed };
std::string_view action_name(StepAction a);

struct InvolutionStep {
  OrderedPartition input;
  StepAction action = StepAction::Fixed;
  int pivot = 0;  // 0 when fixed
  OrderedPartition output;
};

/// Tuple slot whose last block has maximum base M: 0 for the zero block,
/// j >= 1 for the j-th tuple, -1 if M is not such a maximum.
int pivot_slot(const OrderedPartition& w, int M);

bool splittable(const OrderedPartition& w, int M);
bool mergeable(const OrderedPartition& w, int M);

/// Throw InvolutionError naming the blocker when the map does not apply.
OrderedPartition split(const OrderedPartition& w, int M);
OrderedPartition merge(const OrderedPartition& w, int M);

/// Acts at the largest M (scanning n..1) where w is splittable or mergeable.
InvolutionStep iota(const OrderedPartition& w);

/// Super: n-k+inv. CR: (m-1)(n-k)+inv.
int flavor_statistic(const OrderedPartition& w);

struct CancellationResult {
  VerificationReport report;
  long total = 0;       // ordered partitions visited
  long two_cycles = 0;
  std::vector<OrderedPartition> fixed_points;
  IntPoly fixed_sum;    // sum of sgn q^stat over fixed points
  IntPoly signed_sum;   // same over everything
  IntPoly expected;     // 1 (super) or [m-1]^n (CR)
};

/// Exhaustive check over every ordered partition of the flavor.
CancellationResult verify_cancellation(int m, int n, Flavor flavor);

}  // namespace crgstir
