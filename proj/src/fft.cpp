#include "carlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "carlab/error.hpp"
#include "carlab/kernels.hpp"

namespace carlab {

namespace {

// FFTW planning is not thread-safe; execution with the new-array API is.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find({n, sign});
        if (it != plans_.end()) return it->second;
        std::vector<cplx> scratch(static_cast<std::size_t>(n) * n);
        auto* data = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = fftw_plan_dft_2d(n, n, data, data, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) throw Error("FFTW failed to create a plan");
        plans_.emplace(std::make_pair(n, sign), plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plans() {
    static PlanCache cache;
    return cache;
}

std::vector<cplx> transform(const Field& field, int sign, double scale) {
    const int n = field.grid().n();
    std::vector<cplx> data(field.values().begin(), field.values().end());
    // Centering: the lattices start at -L and -n/2, which turns the
    // exponential into (-1)^(j + j') times the plain DFT kernel.
    kernels::scale_alternating(data, n, 1.0);
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plans().get(n, sign), raw, raw);
    kernels::scale_alternating(data, n, scale);
    return data;
}

}  // namespace

Field fft(const Field& field) {
    if (field.space() != Space::position) throw Error("fft expects a position-space field");
    const double h = field.grid().spacing();
    return Field(field.grid(), transform(field, FFTW_FORWARD, h * h), Space::frequency);
}

Field ifft(const Field& field) {
    if (field.space() != Space::frequency) throw Error("ifft expects a frequency-space field");
    const double nh = field.grid().n() * field.grid().spacing();
    return Field(field.grid(), transform(field, FFTW_BACKWARD, 1.0 / (nh * nh)), Space::position);
}

}  // namespace carlab
