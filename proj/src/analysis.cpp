#include "naed/analysis.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace naed {

void Tally::merge(const Tally& other) {
  total += other.total;
  r0 += other.r0;
  r1 += other.r1;
  ra += other.ra;
  rb += other.rb;
  for (const auto& [key, n] : other.accepted_hist) accepted_hist[key] += n;
}

namespace {

double pdf_sum(const Pdf& p) {
  double s = 0.0;
  for (const auto& [key, v] : p) s += v;
  return s;
}

}  // namespace

double similarity(const Pdf& a, const Pdf& b) {
  if (std::abs(pdf_sum(a) - 1.0) > 1e-9 || std::abs(pdf_sum(b) - 1.0) > 1e-9) {
    throw ValidationError("similarity requires normalized PDFs");
  }
  double l1 = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      l1 += std::abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      l1 += std::abs(ib->second);
      ++ib;
    } else {
      l1 += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return 100.0 - 50.0 * l1;
}

Tally tally(const Counts& shots, const BitFlipCode& code, int n_logical) {
  Tally t;
  const std::string zeros(n_logical, '0');
  const std::string ones(n_logical, '1');
  for (const auto& [bits, n] : shots) {
    const ShotClassification c = classify_shot(code, n_logical, bits);
    t.total += n;
    if (!c.accepted) {
      t.rb += n;
      continue;
    }
    t.accepted_hist[c.logical] += n;
    if (c.logical == zeros) {
      t.r0 += n;
    } else if (c.logical == ones) {
      t.r1 += n;
    } else {
      t.ra += n;
    }
  }
  return t;
}

Tally tally_from_pdf(const Pdf& pdf, const BitFlipCode& code, int n_logical,
                     std::uint64_t total) {
  Counts counts;
  for (const auto& [bits, p] : pdf) {
    const double expected = p * static_cast<double>(total);
    const double rounded = std::round(expected);
    if (std::abs(expected - rounded) > 1e-6) {
      throw ValidationError("probability " + std::to_string(p) +
                            " times total is not integral");
    }
    if (rounded > 0) counts[bits] = static_cast<std::uint64_t>(rounded);
  }
  return tally(counts, code, n_logical);
}

Metrics metrics(const Tally& t, int n_logical, int q) {
  if (t.total == 0) throw ValidationError("metrics requires T > 0");
  for (const auto& [key, n] : t.accepted_hist) {
    if (key.size() != static_cast<std::size_t>(n_logical)) {
      throw ValidationError("accepted histogram key length mismatch");
    }
  }
  (void)q;

  const double total = static_cast<double>(t.total);
  Metrics m;
  // Equation form of mu_full over the tally: the ideal PDF holds 0.5 on each
  // of the two GHZ strings and nothing elsewhere, so the L1 distance is
  // |r0/T - 1/2| + |r1/T - 1/2| + (ra + rb)/T.
  m.mu_full = 100.0 - 50.0 * (std::abs(t.r0 / total - 0.5) +
                              std::abs(t.r1 / total - 0.5) +
                              (t.ra + t.rb) / total);
  m.p_kept = 100.0 * (1.0 - t.rb / total);

  const std::uint64_t accepted = t.r0 + t.r1 + t.ra;
  if (accepted > 0) {
    const double a = static_cast<double>(accepted);
    m.mu_naed = 100.0 - 50.0 * (std::abs(t.r0 / a - 0.5) +
                                std::abs(t.r1 / a - 0.5) + t.ra / a);
  }
  return m;
}

IdentityCheck identity_check(const Tally& t) {
  if (t.total == 0) throw ValidationError("identity_check requires T > 0");
  const auto T = static_cast<std::int64_t>(t.total);
  const auto r0 = static_cast<std::int64_t>(t.r0);
  const auto r1 = static_cast<std::int64_t>(t.r1);
  const auto ra = static_cast<std::int64_t>(t.ra);
  const auto rb = static_cast<std::int64_t>(t.rb);

  IdentityCheck result;
  result.applicable = 2 * r0 <= T && 2 * r1 <= T;
  if (!result.applicable) return result;

  // Both sides as exact numerators over 2T.
  const std::int64_t lhs =
      200 * T - 50 * (std::abs(2 * r0 - T) + std::abs(2 * r1 - T)) -
      100 * (ra + rb);
  const std::int64_t rhs = 2 * (100 * (T - rb) - 100 * ra);
  result.residual = lhs - rhs;
  return result;
}

Pdf pdf_from_counts(const Counts& counts) {
  std::uint64_t total = 0;
  for (const auto& [bits, n] : counts) total += n;
  if (total == 0) throw ValidationError("cannot normalize empty counts");
  Pdf pdf;
  for (const auto& [bits, n] : counts) {
    pdf[bits] = static_cast<double>(n) / static_cast<double>(total);
  }
  return pdf;
}

Pdf pdf_from_state(const StateVector& state) {
  Pdf pdf;
  const double norm = norm_squared(state);
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state.amps[i]) / norm;
    if (p > 0.0) pdf[bits_of_index(i, state.n_qubits)] = p;
  }
  return pdf;
}

namespace {

std::string json_number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

std::string tally_to_json(const Tally& t) {
  std::ostringstream os;
  os << "{\"T\":" << t.total << ",\"r0\":" << t.r0 << ",\"r1\":" << t.r1
     << ",\"ra\":" << t.ra << ",\"rb\":" << t.rb << ",\"accepted\":{";
  bool first = true;
  for (const auto& [key, n] : t.accepted_hist) {
    if (!first) os << ",";
    os << "\"" << key << "\":" << n;
    first = false;
  }
  os << "}}";
  return os.str();
}

std::string metrics_to_json(const Metrics& m) {
  std::ostringstream os;
  os << "{\"mu_full\":" << json_number(m.mu_full) << ",\"mu_naed\":";
  if (m.mu_naed) {
    os << json_number(*m.mu_naed);
  } else {
    os << "null";
  }
  os << ",\"p_kept\":" << json_number(m.p_kept) << "}";
  return os.str();
}

}  // namespace naed
