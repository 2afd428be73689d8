#pragma once

namespace phasewave {

// Largest polynomial degree / state index accepted anywhere in the library.
inline constexpr int kMaxPolyOrder = 64;

// Validated non-negative polynomial order, 0 <= n <= kMaxPolyOrder.
// Implicit from int so call sites read naturally: laguerre(3, x).
class PolyOrder {
 public:
  PolyOrder(int n);  // NOLINT(google-explicit-constructor)

  constexpr int value() const noexcept { return n_; }
  constexpr operator int() const noexcept { return n_; }  // NOLINT

 private:
  int n_;
};

// Laguerre polynomial L_n(x) by the three-term recurrence
// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
// Throws DomainError for non-finite x.
double laguerre(PolyOrder n, double x);

// Physicists' Hermite polynomial, H_{k+1} = 2x H_k - 2k H_{k-1}.
double hermite(PolyOrder n, double x);

// -n ln 2 - ln n!, the log of the 1/(2^n n!) prefactor of oscillator densities.
double log_weight(PolyOrder n);

}  // namespace phasewave
