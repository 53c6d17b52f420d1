#include "torus/field.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace torus {

namespace {

// Plan cache per grid size. Plans are created with FFTW_UNALIGNED so they can
// be executed on any caller buffer via the new-array interface.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache pc;
    return pc;
  }

  void execute(int n, int sign, std::complex<double>* in,
               std::complex<double>* out) {
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto key = std::make_pair(n, sign);
      auto it = plans_.find(key);
      if (it == plans_.end()) {
        std::vector<std::complex<double>> tmp(std::size_t(n) * n * n);
        plan = fftw_plan_dft_3d(
            n, n, n, reinterpret_cast<fftw_complex*>(tmp.data()),
            reinterpret_cast<fftw_complex*>(tmp.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_[key] = plan;
      } else {
        plan = it->second;
      }
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in),
                     reinterpret_cast<fftw_complex*>(out));
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

}  // namespace

SpectralField transform(const RealField& f) {
  const Grid& g = f.grid();
  SpectralField F(g, f.ncomp());
  const double norm = 1.0 / double(g.size3());
  Eigen::ArrayXcd buf(g.size3());
  for (int c = 0; c < f.ncomp(); ++c) {
    buf.real() = f.comp(c);
    buf.imag().setZero();
    PlanCache::instance().execute(g.n, FFTW_FORWARD, buf.data(),
                                  F.comp(c).data());
    F.comp(c) *= norm;
  }
  return F;
}

RealField inverse_transform(const SpectralField& F) {
  const Grid& g = F.grid();
  RealField f(g, F.ncomp());
  Eigen::ArrayXcd in(g.size3()), out(g.size3());
  for (int c = 0; c < F.ncomp(); ++c) {
    in = F.comp(c);
    PlanCache::instance().execute(g.n, FFTW_BACKWARD, in.data(), out.data());
    f.comp(c) = out.real();
  }
  return f;
}

}  // namespace torus
