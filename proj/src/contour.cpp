#include "gaussnorm/contour.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <thread>
#include <vector>

#include "gaussnorm/error.hpp"
#include "gaussnorm/norms.hpp"

namespace gaussnorm {

std::size_t Range::count() const {
  if (!(step > 0.0) || stop < start) return 0;
  // inclusive stop, tolerant to the rounding of (stop - start) / step
  return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

Range parse_range(std::string_view text) {
  Range r;
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw Error(Errc::kInvalidArgument, "range must look like start:step:stop");
  }
  try {
    r.start = std::stod(std::string(text.substr(0, first)));
    r.step = std::stod(std::string(text.substr(first + 1, second - first - 1)));
    r.stop = std::stod(std::string(text.substr(second + 1)));
  } catch (const std::exception&) {
    throw Error(Errc::kInvalidArgument, "range must look like start:step:stop");
  }
  if (!(r.step > 0.0) || !(r.stop >= r.start)) {
    throw Error(Errc::kInvalidArgument, "range needs step > 0 and stop >= start");
  }
  return r;
}

void validate(const ContourJob& job) {
  if (!(std::abs(job.theta) < 0.5 * std::numbers::pi)) {
    throw Error(Errc::kInvalidArgument, "need |theta| < pi/2");
  }
  if (!(job.re.start > 0.0)) throw Error(Errc::kInvalidArgument, "Re t range must start above 0");
  if (!(job.re.step > 0.0) || !(job.im.step > 0.0)) {
    throw Error(Errc::kInvalidArgument, "range steps must be positive");
  }
  const std::size_t nr = job.re.count();
  const std::size_t ni = job.im.count();
  if (nr == 0 || ni == 0) throw Error(Errc::kInvalidArgument, "empty range");
  if (nr > kContourGuard / ni) {
    throw Error(Errc::kGridGuard, "contour grid exceeds 4e6 points",
                static_cast<double>(nr) * static_cast<double>(ni));
  }
}

std::string contour_csv(const ContourJob& job, unsigned threads) {
  validate(job);
  const std::size_t nr = job.re.count();
  const std::size_t ni = job.im.count();
  std::vector<std::string> rows(ni);

  const auto render_row = [&](std::size_t j) {
    const double im = job.im.at(j);
    std::string out;
    out.reserve(nr * 60);
    char buf[96];
    for (std::size_t i = 0; i < nr; ++i) {
      const double re = job.re.at(i);
      int len = 0;
      try {
        const DaviesResult d = davies_norm(job.theta, {re, im});
        len = std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e\n", re, im, std::log(d.norm));
      } catch (const Error& e) {
        if (e.code() != Errc::kUnbounded) throw;
        len = std::snprintf(buf, sizeof buf, "%.12e,%.12e,inf\n", re, im);
      }
      out.append(buf, static_cast<std::size_t>(len));
    }
    rows[j] = std::move(out);
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, ni));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(workers);
  const auto work = [&](unsigned w) {
    try {
      for (std::size_t j = next++; j < ni; j = next++) render_row(j);
    } catch (...) {
      failures[w] = std::current_exception();
      next = ni;
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::string csv = "re_t,im_t,log_norm\n";
  for (const auto& r : rows) csv += r;
  return csv;
}

void run_contour(const ContourJob& job, unsigned threads) {
  const std::string csv = contour_csv(job, threads);
  std::ofstream out(job.out, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write " + job.out);
  out << csv;
  if (!out) throw Error(Errc::kInvalidArgument, "write failed for " + job.out);
}

}  // namespace gaussnorm
