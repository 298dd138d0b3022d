#include "fairdiv/lemmas.hpp"

#include <vector>

namespace fairdiv {

namespace {

struct Stride {
  Int num;  // 2 H_n (n - i + 1) = num / den
  Int den;
};

std::vector<Stride> strides_for(int n) {
  const Rat h2 = 2 * harmonic(n);
  std::vector<Stride> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Rat s = h2 * (n - i + 1);
    out.push_back({boost::multiprecision::numerator(s), boost::multiprecision::denominator(s)});
  }
  return out;
}

template <typename TermFn>
LemmaReport scan(int n_max, long long d_max, TermFn&& lhs_for) {
  if (n_max < 1) raise(Errc::zero_n, "need n_max >= 1");
  LemmaReport report;
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Stride> strides = strides_for(n);
    for (long long d = n + 1; d <= d_max; ++d) {
      Int lhs = lhs_for(n, d, strides);
      const Int rhs = d - n;
      ++report.checked;
      if (lhs > rhs) {
        report.counterexample = LemmaCounterexample{n, d, std::move(lhs), rhs};
        return report;
      }
    }
  }
  return report;
}

Int floor_sum(int n, long long d, const std::vector<Stride>& strides) {
  Int total = 0;
  for (int i = 1; i <= n; ++i) {
    const Stride& s = strides[static_cast<std::size_t>(i - 1)];
    total += Int(d - i) * s.den / s.num;  // both positive, division floors
  }
  return total;
}

}  // namespace

Int deadline_count_bound(int n, long long d) {
  if (n < 1) raise(Errc::zero_n, "need n >= 1");
  if (d < n + 1) raise(Errc::bad_argument, "bound defined for d >= n + 1");
  return floor_sum(n, d, strides_for(n));
}

Int refined_deadline_count_bound(int n, long long d) {
  return Int((d - 1) / (2 * static_cast<long long>(n))) + deadline_count_bound(n, d);
}

LemmaReport verify_deadline_inequality(int n_max, long long d_max) {
  return scan(n_max, d_max, [](int n, long long d, const std::vector<Stride>& strides) {
    return floor_sum(n, d, strides);
  });
}

LemmaReport verify_refined_deadline_inequality(int n_max, long long d_max) {
  return scan(n_max, d_max, [](int n, long long d, const std::vector<Stride>& strides) {
    return Int((d - 1) / (2 * static_cast<long long>(n))) + floor_sum(n, d, strides);
  });
}

LemmaReport verify_harmonic_chain(int n_max) {
  LemmaReport report;
  for (int n = 4; n <= n_max; ++n) {
    ++report.checked;
    const Rat lhs = harmonic(3 * n);
    const Rat rhs = 2 * harmonic(n) - 1;
    if (lhs > rhs) {
      report.counterexample = LemmaCounterexample{n, 0, Int(0), Int(0)};
      return report;
    }
  }
  return report;
}

}  // namespace fairdiv
