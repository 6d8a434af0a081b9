#include "privcoal/coalition.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "privcoal/linalg.hpp"

namespace privcoal {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

void require_coalition_shape(const Track& track, unsigned t, unsigned j) {
  if (track.size() >= t) {
    throw ParameterError("coalition length " + num(track.size()) + " must be below the threshold t=" +
                         num(t));
  }
  if (t > track.modulus().value()) {
    throw ParameterError("threshold t=" + num(t) + " exceeds the field order p=" +
                         num(track.modulus().value()));
  }
  if (j >= t) throw ParameterError("coefficient index j=" + num(j) + " must be below t=" + num(t));
}

}  // namespace

void validate_sweep_parameters(unsigned t, unsigned j, std::uint64_t p, unsigned N) {
  if (t < 3) throw ParameterError("violated t >= 3 (t=" + num(t) + ")");
  if (!is_prime(p)) throw ParameterError("p=" + num(p) + " is not prime");
  if (t > p) throw ParameterError("violated t <= p (t=" + num(t) + ", p=" + num(p) + ")");
  if (N < 1 || N > p) {
    throw ParameterError("violated 1 <= N <= p (N=" + num(N) + ", p=" + num(p) + ")");
  }
  if (j >= t) throw ParameterError("violated j <= t-1 (j=" + num(j) + ", t=" + num(t) + ")");
}

void CoalitionQuery::validate() const {
  validate_sweep_parameters(t, j, p, N);
  if (2 * r < t + 1) {
    throw ParameterError("violated (t+1)/2 <= r (t=" + num(t) + ", r=" + num(r) + ")");
  }
  if (r > t - 1) throw ParameterError("violated r <= t-1 (t=" + num(t) + ", r=" + num(r) + ")");
  if (t - r > j) {
    throw ParameterError("violated t-r <= j (t=" + num(t) + ", r=" + num(r) + ", j=" + num(j) + ")");
  }
  if (j > r - 1) throw ParameterError("violated j <= r-1 (j=" + num(j) + ", r=" + num(r) + ")");
  if (r > N) throw ParameterError("violated r <= N (r=" + num(r) + ", N=" + num(N) + ")");
}

std::vector<unsigned> valid_lengths(unsigned t, unsigned j) {
  std::vector<unsigned> out;
  for (unsigned r = 1; r < t; ++r) {
    if (2 * r >= t + 1 && t - r <= j && j + 1 <= r) out.push_back(r);
  }
  return out;
}

void for_each_track_with_first(unsigned r, unsigned N, unsigned first, PrimeModulus modulus,
                               const std::function<void(const Track&)>& visit) {
  if (r < 1 || r > N) {
    throw ParameterError("track length r=" + num(r) + " must satisfy 1 <= r <= N=" + num(N));
  }
  if (N > modulus.value()) {
    throw ParameterError("identity bound N=" + num(N) + " exceeds p=" + num(modulus.value()));
  }
  if (first < 1 || first + r - 1 > N) return;
  std::vector<std::uint64_t> combo(r);
  for (unsigned i = 0; i < r; ++i) combo[i] = first + i;
  while (true) {
    visit(Track(combo, modulus, LabelRange::kUpToFieldOrder));
    // Advance positions 1..r-1; position 0 stays fixed.
    unsigned i = r;
    while (i > 1 && combo[i - 1] == N - r + i) --i;
    if (i <= 1) return;
    ++combo[i - 1];
    for (unsigned k = i; k < r; ++k) combo[k] = combo[k - 1] + 1;
  }
}

void for_each_track(unsigned r, unsigned N, PrimeModulus modulus,
                    const std::function<void(const Track&)>& visit) {
  if (r < 1 || r > N) {
    throw ParameterError("track length r=" + num(r) + " must satisfy 1 <= r <= N=" + num(N));
  }
  for (unsigned first = 1; first + r - 1 <= N; ++first) {
    for_each_track_with_first(r, N, first, modulus, visit);
  }
}

std::vector<Track> enumerate_tracks(unsigned r, unsigned N, PrimeModulus modulus) {
  std::vector<Track> out;
  for_each_track(r, N, modulus, [&](const Track& tr) { out.push_back(tr); });
  return out;
}

bool is_privileged(const Track& track, unsigned t, unsigned j) {
  require_coalition_shape(track, t, j);
  const auto r = static_cast<unsigned>(track.size());
  // Window {r-j, ..., t-1-j}, clipped to [0, r]. With nonzero identities it
  // contains tau_0 = 1 or tau_r = prod l_i whenever j lies outside
  // [t-r, r-1], so those cases come out false.
  const unsigned low = j >= r ? 0 : r - j;
  const unsigned high = std::min(r, t - 1 - j);
  const auto tau = elem_sym_all(track);
  for (unsigned omega = low; omega <= high; ++omega) {
    if (!tau[omega].is_zero()) return false;
  }
  return true;
}

bool privileged_rank_oracle(const Track& track, unsigned t, unsigned j) {
  require_coalition_shape(track, t, j);
  const Matrix a = Matrix::power_matrix(track.elements(), t);
  std::vector<FieldElement> unit(t, FieldElement::zero(track.modulus()));
  unit[j] = FieldElement::one(track.modulus());
  return a.row_space_contains(unit);
}

bool lemma2_condition(const Track& track, const Track& extension, unsigned t, unsigned j) {
  require_coalition_shape(track, t, j);
  if (extension.size() + track.size() != t) {
    throw ParameterError("extension length " + num(extension.size()) + " must equal t-r=" +
                         num(t - track.size()));
  }
  if (!track.disjoint_with(extension)) throw ParameterError("extension overlaps the coalition");
  if (extension.modulus() != track.modulus()) throw ParameterError("extension over a different modulus");

  const std::size_t omega = t - 1 - j;
  std::vector<FieldElement> joined(track.elements().begin(), track.elements().end());
  for (std::size_t m = 0; m < extension.size(); ++m) {
    std::vector<FieldElement> points = joined;
    for (std::size_t k = 0; k < extension.size(); ++k) {
      if (k != m) points.push_back(extension[k]);
    }
    if (!elem_sym(points, omega, track.modulus()).is_zero()) return false;
  }
  return true;
}

bool is_minimal_privileged(const Track& track, unsigned t, unsigned j) {
  if (!is_privileged(track, t, j)) return false;
  const std::uint64_t full = (std::uint64_t{1} << track.size()) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (privileged_rank_oracle(track.subtrack(mask), t, j)) return false;
  }
  return true;
}

bool is_unextended(const Track& track, unsigned t, unsigned j) {
  if (track.size() != t) {
    throw ParameterError("an unextended track has length t=" + num(t) + ", got " + num(track.size()));
  }
  if (j >= t) throw ParameterError("coefficient index j=" + num(j) + " must be below t=" + num(t));
  const std::uint64_t full = (std::uint64_t{1} << track.size()) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (privileged_rank_oracle(track.subtrack(mask), t, j)) return false;
  }
  return true;
}

namespace {

std::vector<Track> scan(const CoalitionQuery& q, unsigned workers,
                        const std::function<bool(const Track&)>& accept) {
  const PrimeModulus modulus(q.p);
  const unsigned firsts = q.N - q.r + 1;
  std::vector<std::vector<Track>> by_first(firsts);
  auto run = [&](unsigned first) {
    for_each_track_with_first(q.r, q.N, first, modulus, [&](const Track& tr) {
      if (accept(tr)) by_first[first - 1].push_back(tr);
    });
  };
  workers = std::max(1U, std::min(workers, firsts));
  if (workers == 1) {
    for (unsigned first = 1; first <= firsts; ++first) run(first);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (unsigned first = 1 + w; first <= firsts; first += workers) run(first);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Track> out;
  for (auto& part : by_first) {
    for (auto& tr : part) out.push_back(std::move(tr));
  }
  return out;
}

}  // namespace

CoalitionReport privileged_coalitions(const CoalitionQuery& q, unsigned workers) {
  q.validate();
  CoalitionReport report{.query = q};
  report.coalitions = scan(q, workers, [&](const Track& tr) { return is_privileged(tr, q.t, q.j); });
  return report;
}

CoalitionReport minimal_privileged_coalitions(const CoalitionQuery& q, unsigned workers) {
  q.validate();
  CoalitionReport report{.query = q, .minimal_only = true};
  report.coalitions =
      scan(q, workers, [&](const Track& tr) { return is_minimal_privileged(tr, q.t, q.j); });
  return report;
}

CoalitionReport minimal_privileged_sweep(unsigned t, unsigned j, std::uint64_t p, unsigned N,
                                         unsigned workers) {
  validate_sweep_parameters(t, j, p, N);
  CoalitionReport report{.query = {.t = t, .j = j, .r = 0, .p = p, .N = N},
                         .all_lengths = true,
                         .minimal_only = true};
  for (unsigned r : valid_lengths(t, j)) {
    if (r > N) continue;
    const CoalitionQuery q{.t = t, .j = j, .r = r, .p = p, .N = N};
    if (!report.r_min) {
      const auto privileged = privileged_coalitions(q, workers);
      if (privileged.count() > 0) {
        report.r_min = r;
        report.N_min = privileged.count();
      }
    }
    auto minimal = minimal_privileged_coalitions(q, workers);
    for (auto& tr : minimal.coalitions) report.coalitions.push_back(std::move(tr));
  }
  return report;
}

CoalitionReport shortest_privileged_coalitions(unsigned t, unsigned j, std::uint64_t p, unsigned N,
                                               unsigned workers) {
  validate_sweep_parameters(t, j, p, N);
  CoalitionReport report{.query = {.t = t, .j = j, .r = 0, .p = p, .N = N}, .all_lengths = true};
  for (unsigned r : valid_lengths(t, j)) {
    if (r > N) continue;
    auto privileged = privileged_coalitions({.t = t, .j = j, .r = r, .p = p, .N = N}, workers);
    if (privileged.count() > 0) {
      report.r_min = r;
      report.N_min = privileged.count();
      report.coalitions = std::move(privileged.coalitions);
      return report;
    }
  }
  return report;
}

std::map<unsigned, std::size_t> count_by_length(const CoalitionReport& report) {
  std::map<unsigned, std::size_t> out;
  for (const auto& tr : report.coalitions) ++out[static_cast<unsigned>(tr.size())];
  return out;
}

}  // namespace privcoal
