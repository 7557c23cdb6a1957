#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace gaussnorm {

/// start:step:stop with an inclusive stop.
struct Range {
  double start = 0.0;
  double step = 1.0;
  double stop = 0.0;

  std::size_t count() const;
  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

/// Throws kInvalidArgument.
Range parse_range(std::string_view text);

struct ContourJob {
  double theta = 0.0;
  Range re;  // start > 0
  Range im;
  std::string out;
};

inline constexpr std::size_t kContourGuard = 4'000'000;

/// Throws kInvalidArgument for a bad job and kGridGuard when the grid
/// exceeds kContourGuard points.
void validate(const ContourJob& job);

/// CSV with header re_t,im_t,log_norm; rows im-major, `inf` where the
/// semigroup is unbounded. threads = 0 uses the hardware concurrency.
std::string contour_csv(const ContourJob& job, unsigned threads = 0);

/// Writes contour_csv(job) to job.out.
void run_contour(const ContourJob& job, unsigned threads = 0);

}  // namespace gaussnorm
