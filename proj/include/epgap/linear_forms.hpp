#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "epgap/sieve.hpp"

namespace epgap {

// T_n = sum_{i=1}^k a_i p_{n+i} with integer coefficients, k >= 2.
class LinearForm {
public:
  explicit LinearForm(std::vector<std::int64_t> coefficients);

  std::size_t k() const { return a_.size(); }
  std::span<const std::int64_t> coefficients() const { return a_; }
  std::int64_t coefficient_sum() const;
  bool zero_sum() const { return coefficient_sum() == 0; }

private:
  std::vector<std::int64_t> a_;
};

// alpha_j = a_1 + ... + a_j for j = 1..k (alpha_0 = 0 is implicit).
struct AlphaProfile {
  std::vector<std::int64_t> alpha;

  std::size_t k() const { return alpha.size(); }
  std::size_t ell() const { return alpha.size() - 1; }
  std::int64_t last() const { return alpha.back(); }
};

AlphaProfile alpha_profile(const LinearForm& form);

// First differences of the profile; inverts alpha_profile exactly.
LinearForm form_from_profile(const AlphaProfile& profile);

enum class FormClass { NotZeroSum, OneSigned, MixedSign };

std::string_view to_string(FormClass c);

struct Classification {
  FormClass kind = FormClass::NotZeroSum;
  // Sum_{i<k} alpha_i == 0 and alpha_{k-1} != 0; sufficient for a sign change.
  bool erdos_easy = false;
  // All of alpha_1..alpha_{k-1} vanish, so T_n is identically zero.
  bool degenerate = false;
  // For OneSigned, the common sign of the nonzero alphas (0 if degenerate).
  int alpha_sign = 0;

  // Sign every T_n must take for a non-degenerate OneSigned form.
  int predicted_sign() const { return -alpha_sign; }
};

Classification classify(const LinearForm& form);

// Exact T_n. `primes` holds p_1, p_2, ... at positions 0, 1, ...
// Throws std::range_error when p_{n+k} is not available or the value does
// not fit in 64 bits.
std::int64_t evaluate_direct(const LinearForm& form, std::uint64_t n,
                             std::span<const std::uint64_t> primes);

// -sum_{j=2}^k alpha_{j-1} d_{n+j}. Throws std::logic_error when the
// originating form is not zero-sum (alpha_k != 0).
std::int64_t evaluate_gap_form(const AlphaProfile& profile, std::uint64_t n, const GapView& gaps);

struct SignChangeReport {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> positions; // later index of each change
  std::uint64_t zeros = 0;
  std::uint64_t evaluated = 0;
};

// Sign changes between consecutive nonzero values; zeros are skipped and
// do not reset the running sign. values[i] belongs to index first_index + i.
SignChangeReport count_sign_changes(std::span<const std::int64_t> values,
                                    std::uint64_t first_index);

// T_n for n in [first, last]; empty when first > last.
std::vector<std::int64_t> evaluate_range(const LinearForm& form, std::uint64_t first,
                                         std::uint64_t last, std::span<const std::uint64_t> primes);

// Throws std::logic_error for a form that is not zero-sum.
SignChangeReport count_sign_changes(const LinearForm& form, std::uint64_t first,
                                    std::uint64_t last, std::span<const std::uint64_t> primes);

// Parses "1,-2,1". Throws std::invalid_argument on malformed input.
std::vector<std::int64_t> parse_integer_list(std::string_view text);

} // namespace epgap
