#include "phasewave/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phasewave/errors.hpp"

namespace phasewave {

PolyOrder::PolyOrder(int n) : n_(n) {
  if (n < 0 || n > kMaxPolyOrder) {
    throw DomainError("polynomial order " + std::to_string(n) +
                      " outside [0, " + std::to_string(kMaxPolyOrder) + "]");
  }
}

namespace {

void require_finite(double x, const char* op) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(op) + ": non-finite argument");
  }
}

}  // namespace

double laguerre(PolyOrder order, double x) {
  require_finite(x, "laguerre");
  const int n = order.value();
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite(PolyOrder order, double x) {
  require_finite(x, "hermite");
  const int n = order.value();
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_weight(PolyOrder order) {
  const int n = order.value();
  double log_factorial = 0.0;
  for (int k = 2; k <= n; ++k) log_factorial += std::log(static_cast<double>(k));
  return -n * std::numbers::ln2 - log_factorial;
}

}  // namespace phasewave
