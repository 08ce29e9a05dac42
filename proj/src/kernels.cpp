#include "hgl/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

namespace hgl::kernels {

namespace {

std::atomic<int> g_threads{0};

int threads() {
  const int n = g_threads.load();
  return n > 0 ? n : omp_get_max_threads();
}

void append_wedges(const Support& s, const std::vector<std::uint8_t>& ok, std::size_t p, const GroupElement& rest,
                   std::vector<std::uint32_t>& prefix, std::vector<std::vector<std::uint32_t>>& out) {
  // rest = z minus the factors chosen so far
  if (p == 1) {
    auto k = s.index_of(rest);
    if (k && ok[*k] && (prefix.empty() || *k > prefix.back())) {
      prefix.push_back(*k);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const std::uint32_t start = prefix.empty() ? 0 : prefix.back() + 1;
  for (std::uint32_t i = start; i < s.size(); ++i) {
    if (!ok[i]) continue;
    prefix.push_back(i);
    append_wedges(s, ok, p - 1, rest - s[i], prefix, out);
    prefix.pop_back();
  }
}

void pairs_from(const Support& s, const std::vector<std::uint8_t>& ok, const GroupElement& z, std::uint32_t i,
                std::vector<Pair>& out) {
  if (!ok[i]) return;
  auto j = s.index_of(z - s[i]);
  if (j && *j > i && ok[*j]) out.push_back({i, *j});
}

void triples_from(const Support& s, const std::vector<std::uint8_t>& ok, const GroupElement& z, std::uint32_t i,
                  std::vector<Triple>& out) {
  if (!ok[i]) return;
  const GroupElement t = z - s[i];
  for (std::uint32_t j = i + 1; j < s.size(); ++j) {
    if (!ok[j]) continue;
    auto k = s.index_of(t - s[j]);
    if (k && *k > j && ok[*k]) out.push_back({i, j, *k});
  }
}

template <class T>
std::vector<T> concat(std::vector<std::vector<T>>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  std::vector<T> out;
  out.reserve(n);
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

Rational column_functional(const SmallColumn& c, std::span<const std::vector<Rational>> rows, std::size_t comp) {
  Rational v = 0;
  for (const auto& e : c.view()) v += Rational(static_cast<long>(e.value)) * rows[e.row][comp];
  return v;
}

bool violates(const SmallColumn& c, std::span<const std::vector<Rational>> rows) {
  if (rows.empty() || c.size == 0) return false;
  const std::size_t d = rows[c.entries[0].row].size();
  for (std::size_t k = 0; k < d; ++k)
    if (!is_zero(column_functional(c, rows, k))) return true;
  return false;
}

}  // namespace

void set_thread_count(int n) { g_threads.store(n); }
int thread_count() { return threads(); }

GradedFrame::GradedFrame(const GroupSpec& spec, const Support& support, const GroupElement& z)
    : spec_(&spec), support_(&support), z_(z) {
  std::vector<GroupElement> all(support.elements());
  for (const auto& s : support) all.push_back(z - s);
  extended_ = Support(std::move(all));
  ext_of_.resize(support.size());
  reflect_of_.resize(support.size());
  for (std::uint32_t i = 0; i < support.size(); ++i) {
    ext_of_[i] = *extended_.index_of(support[i]);
    reflect_of_[i] = *extended_.index_of(z - support[i]);
  }
  ext_reflect_.resize(extended_.size());
  for (std::uint32_t e = 0; e < extended_.size(); ++e) ext_reflect_[e] = *extended_.index_of(z - extended_[e]);
  const auto& om = spec.canonical_form();
  const std::size_t f = spec.free_rank();
  mu_.resize(support.size());
  for (std::uint32_t i = 0; i < support.size(); ++i) {
    mu_[i].assign(f, 0);
    for (std::size_t a = 0; a < f; ++a)
      for (std::size_t b = 0; b < f; ++b)
        mu_[i][b] = checked_add(mu_[i][b], checked_mul(support[i].coords()[a], om(a, b)));
  }
}

std::int64_t GradedFrame::pairing(std::uint32_t s, std::uint32_t t) const {
  std::int64_t v = 0;
  const auto& c = (*support_)[t].coords();
  for (std::size_t b = 0; b < mu_[s].size(); ++b) v = checked_add(v, checked_mul(mu_[s][b], c[b]));
  return v;
}

SmallColumn boundary3_column(const GradedFrame& frame, const Triple& t) {
  // (i,j) -> [z - u_k]^[u_k] with sign (-1)^{1+2}, (i,k) -> +, (j,k) -> -
  SmallColumn col;
  auto put = [&](std::uint32_t a, std::uint32_t b, std::uint32_t rest, std::int64_t sign) {
    const auto pr = frame.pairing(a, b);
    if (pr == 0) return;
    const std::uint32_t x = frame.reflection_of(rest);  // u_a + u_b
    const std::uint32_t y = frame.ext_of(rest);
    if (x == y) return;
    std::int64_t v = checked_mul(sign, pr);
    std::uint32_t row = x;
    if (x > y) {
      row = y;
      v = -v;
    }
    for (std::uint8_t q = 0; q < col.size; ++q)
      if (col.entries[q].row == row) {
        col.entries[q].value = checked_add(col.entries[q].value, v);
        return;
      }
    col.entries[col.size++] = {row, v};
  };
  put(t[0], t[1], t[2], -1);
  put(t[0], t[2], t[1], 1);
  put(t[1], t[2], t[0], -1);
  std::uint8_t n = 0;
  for (std::uint8_t q = 0; q < col.size; ++q)
    if (col.entries[q].value != 0) col.entries[n++] = col.entries[q];
  col.size = n;
  std::sort(col.entries.begin(), col.entries.begin() + n, [](const Entry& a, const Entry& b) { return a.row < b.row; });
  return col;
}

std::vector<std::uint8_t> admissible_mask(const Support& support, Restrict r) {
  std::vector<std::uint8_t> ok(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) ok[i] = admissible(support[i], r) ? 1 : 0;
  return ok;
}

namespace serial {

std::vector<Pair> enumerate_pairs(const Support& s, const GroupElement& z, Restrict r) {
  const auto ok = admissible_mask(s, r);
  std::vector<Pair> out;
  for (std::uint32_t i = 0; i < s.size(); ++i) pairs_from(s, ok, z, i, out);
  return out;
}

std::vector<Triple> enumerate_triples(const Support& s, const GroupElement& z, Restrict r) {
  const auto ok = admissible_mask(s, r);
  std::vector<Triple> out;
  for (std::uint32_t i = 0; i < s.size(); ++i) triples_from(s, ok, z, i, out);
  return out;
}

std::vector<std::vector<std::uint32_t>> enumerate_wedges(const Support& s, std::size_t p, const GroupElement& z,
                                                         Restrict r) {
  if (p == 0) return {};
  const auto ok = admissible_mask(s, r);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> prefix;
  append_wedges(s, ok, p, z, prefix, out);
  return out;
}

std::vector<SmallColumn> boundary3_columns(const GradedFrame& frame, std::span<const Triple> triples) {
  std::vector<SmallColumn> out(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) out[i] = boundary3_column(frame, triples[i]);
  return out;
}

std::size_t count_functional_violations(const GradedFrame& frame, std::span<const Triple> triples,
                                        std::span<const std::vector<Rational>> rows, std::size_t* first) {
  std::size_t bad = 0;
  if (first) *first = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (violates(boundary3_column(frame, triples[i]), rows)) {
      if (bad++ == 0 && first) *first = i;
    }
  return bad;
}

}  // namespace serial

namespace parallel {

std::vector<Pair> enumerate_pairs(const Support& s, const GroupElement& z, Restrict r) {
  const auto ok = admissible_mask(s, r);
  std::vector<std::vector<Pair>> parts(s.size());
  const auto n = static_cast<std::int64_t>(s.size());
#pragma omp parallel for schedule(static) num_threads(threads())
  for (std::int64_t i = 0; i < n; ++i) pairs_from(s, ok, z, static_cast<std::uint32_t>(i), parts[i]);
  return concat(parts);
}

std::vector<Triple> enumerate_triples(const Support& s, const GroupElement& z, Restrict r) {
  const auto ok = admissible_mask(s, r);
  std::vector<std::vector<Triple>> parts(s.size());
  const auto n = static_cast<std::int64_t>(s.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads())
  for (std::int64_t i = 0; i < n; ++i) triples_from(s, ok, z, static_cast<std::uint32_t>(i), parts[i]);
  return concat(parts);
}

std::vector<std::vector<std::uint32_t>> enumerate_wedges(const Support& s, std::size_t p, const GroupElement& z,
                                                         Restrict r) {
  if (p <= 1) return serial::enumerate_wedges(s, p, z, r);
  const auto ok = admissible_mask(s, r);
  std::vector<std::vector<std::vector<std::uint32_t>>> parts(s.size());
  const auto n = static_cast<std::int64_t>(s.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads())
  for (std::int64_t i = 0; i < n; ++i) {
    if (!ok[i]) continue;
    std::vector<std::uint32_t> prefix{static_cast<std::uint32_t>(i)};
    append_wedges(s, ok, p - 1, z - s[i], prefix, parts[i]);
  }
  return concat(parts);
}

std::vector<SmallColumn> boundary3_columns(const GradedFrame& frame, std::span<const Triple> triples) {
  std::vector<SmallColumn> out(triples.size());
  const auto n = static_cast<std::int64_t>(triples.size());
#pragma omp parallel for schedule(static) num_threads(threads())
  for (std::int64_t i = 0; i < n; ++i) out[i] = boundary3_column(frame, triples[i]);
  return out;
}

std::size_t count_functional_violations(const GradedFrame& frame, std::span<const Triple> triples,
                                        std::span<const std::vector<Rational>> rows, std::size_t* first) {
  std::size_t bad = 0;
  std::size_t first_bad = triples.size();
  const auto n = static_cast<std::int64_t>(triples.size());
#pragma omp parallel for schedule(static) num_threads(threads()) reduction(+ : bad) reduction(min : first_bad)
  for (std::int64_t i = 0; i < n; ++i)
    if (violates(boundary3_column(frame, triples[i]), rows)) {
      ++bad;
      first_bad = std::min(first_bad, static_cast<std::size_t>(i));
    }
  if (first) *first = first_bad;
  return bad;
}

}  // namespace parallel

}  // namespace hgl::kernels
