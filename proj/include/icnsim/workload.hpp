#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "icnsim/content_name.hpp"
#include "icnsim/rng.hpp"

namespace icnsim {

class WorkloadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mandelbrot-Zipf popularity law: p(i) proportional to (i + beta)^(-alpha)
/// over ranks 1..n. beta = 0 reduces to pure Zipf.
class MZipf {
 public:
  MZipf(double alpha, double beta, std::uint64_t n);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::uint64_t n() const { return n_; }

  /// Probability of rank (1-based). Throws WorkloadError when out of range.
  double pmf(std::uint64_t rank) const;

 private:
  double alpha_;
  double beta_;
  std::uint64_t n_;
  double norm_;
};

/// Inverse-CDF sampler over a precomputed cumulative table.
/// sample() consumes exactly one rng draw.
class ZipfSampler {
 public:
  explicit ZipfSampler(const MZipf& dist);
  ObjectId sample(Rng& rng) const;

 private:
  std::vector<double> cumulative_;
};

struct Catalog {
  std::uint64_t n_objects = 0;
  std::uint64_t avg_filesize = 0;  // bytes
  std::uint64_t chunk_size = 0;    // bytes
  std::uint32_t chunks_per_object = 0;
};

Catalog make_catalog(std::uint64_t n_objects, std::uint64_t avg_filesize,
                     std::uint64_t chunk_size);

/// Ceiling division; throws WorkloadError on non-positive inputs.
std::uint64_t chunk_count(std::uint64_t filesize, std::uint64_t chunk_size);

struct RequestEvent {
  double time = 0.0;  // seconds
  NodeId client = 0;
  ObjectId object = 0;
};

/// Per-client Poisson arrivals at `rate_per_client`, objects drawn from
/// `dist`, merged in time order (ties: client id, then per-client sequence).
/// A zero rate yields an empty stream; an empty client list is an error.
std::vector<RequestEvent> generate_workload(double duration_s,
                                            double rate_per_client,
                                            const MZipf& dist,
                                            std::span<const NodeId> clients,
                                            std::uint64_t seed);

}  // namespace icnsim
