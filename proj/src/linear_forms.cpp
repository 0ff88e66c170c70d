#include "epgap/linear_forms.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace epgap {

LinearForm::LinearForm(std::vector<std::int64_t> coefficients) : a_(std::move(coefficients)) {
  if (a_.size() < 2) throw std::invalid_argument("linear form needs at least two coefficients");
}

std::int64_t LinearForm::coefficient_sum() const {
  return std::accumulate(a_.begin(), a_.end(), std::int64_t{0});
}

AlphaProfile alpha_profile(const LinearForm& form) {
  AlphaProfile out;
  out.alpha.reserve(form.k());
  std::int64_t run = 0;
  for (std::int64_t a : form.coefficients()) {
    run += a;
    out.alpha.push_back(run);
  }
  return out;
}

LinearForm form_from_profile(const AlphaProfile& profile) {
  std::vector<std::int64_t> a(profile.alpha.size());
  std::adjacent_difference(profile.alpha.begin(), profile.alpha.end(), a.begin());
  return LinearForm(std::move(a));
}

std::string_view to_string(FormClass c) {
  switch (c) {
    case FormClass::NotZeroSum: return "NOT_ZERO_SUM";
    case FormClass::OneSigned: return "ONE_SIGNED";
    case FormClass::MixedSign: return "MIXED_SIGN";
  }
  return "?";
}

Classification classify(const LinearForm& form) {
  const AlphaProfile prof = alpha_profile(form);
  Classification out;
  if (prof.last() != 0) return out;

  const std::size_t ell = prof.ell();
  bool any_pos = false;
  bool any_neg = false;
  std::int64_t head_sum = 0;
  for (std::size_t j = 0; j < ell; ++j) {
    any_pos |= prof.alpha[j] > 0;
    any_neg |= prof.alpha[j] < 0;
    head_sum += prof.alpha[j];
  }
  out.erdos_easy = head_sum == 0 && prof.alpha[ell - 1] != 0;
  if (any_pos && any_neg) {
    out.kind = FormClass::MixedSign;
  } else {
    out.kind = FormClass::OneSigned;
    out.degenerate = !any_pos && !any_neg;
    out.alpha_sign = any_pos ? 1 : (any_neg ? -1 : 0);
  }
  return out;
}

namespace {

std::int64_t narrow(__int128 v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw std::range_error("linear form value exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

} // namespace

std::int64_t evaluate_direct(const LinearForm& form, std::uint64_t n,
                             std::span<const std::uint64_t> primes) {
  if (n < 1 || n + form.k() > primes.size())
    throw std::range_error("evaluate_direct needs p_" + std::to_string(n + form.k()) + ", have " +
                           std::to_string(primes.size()) + " primes");
  __int128 acc = 0;
  const auto a = form.coefficients();
  // p_{n+i} sits at position n+i-1.
  for (std::size_t i = 0; i < a.size(); ++i) acc += __int128(a[i]) * primes[n + i];
  return narrow(acc);
}

std::int64_t evaluate_gap_form(const AlphaProfile& profile, std::uint64_t n, const GapView& gaps) {
  if (profile.alpha.empty() || profile.last() != 0)
    throw std::logic_error("gap-form evaluation requires a zero-sum form");
  const std::size_t k = profile.k();
  if (n < 1 || n + k > gaps.last_index())
    throw std::range_error("evaluate_gap_form needs d_" + std::to_string(n + k));
  __int128 acc = 0;
  for (std::size_t j = 2; j <= k; ++j) acc -= __int128(profile.alpha[j - 2]) * gaps(n + j);
  return narrow(acc);
}

SignChangeReport count_sign_changes(std::span<const std::int64_t> values,
                                    std::uint64_t first_index) {
  SignChangeReport out;
  out.evaluated = values.size();
  int last_sign = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int s = (values[i] > 0) - (values[i] < 0);
    if (s == 0) {
      ++out.zeros;
      continue;
    }
    if (last_sign != 0 && s != last_sign) {
      ++out.count;
      out.positions.push_back(first_index + i);
    }
    last_sign = s;
  }
  return out;
}

std::vector<std::int64_t> evaluate_range(const LinearForm& form, std::uint64_t first,
                                         std::uint64_t last, std::span<const std::uint64_t> primes) {
  std::vector<std::int64_t> out;
  if (first > last) return out;
  out.reserve(last - first + 1);
  for (std::uint64_t n = first; n <= last; ++n) out.push_back(evaluate_direct(form, n, primes));
  return out;
}

SignChangeReport count_sign_changes(const LinearForm& form, std::uint64_t first,
                                    std::uint64_t last, std::span<const std::uint64_t> primes) {
  if (!form.zero_sum()) throw std::logic_error("sign changes are counted for zero-sum forms only");
  const auto values = evaluate_range(form, first, last, primes);
  return count_sign_changes(values, first);
}

std::vector<std::int64_t> parse_integer_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

} // namespace epgap
