#pragma once

#include <complex>
#include <cstddef>
#include <limits>

namespace lgf {

using cplx = std::complex<double>;

/// Result of a truncated series evaluation.
///
/// `tail_estimate` is an absolute bound on the dropped tail, formed from the
/// last accepted terms and a geometric extrapolation of their decay.  When
/// `converged` is set, tail_estimate <= tol * max(1, |value|) for the
/// tolerance the evaluation was asked for.
struct SeriesEval {
    cplx value{0.0, 0.0};
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
};

/// Kahan-compensated accumulator; summation order is the feed order, so
/// results are reproducible run to run.
class KahanSum {
  public:
    void add(cplx x) {
        const cplx y = x - comp_;
        const cplx t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    cplx value() const { return sum_; }

  private:
    cplx sum_{0.0, 0.0};
    cplx comp_{0.0, 0.0};
};

/// Shared stopping logic for the series evaluators.
///
/// A run of `window` consecutive terms below tol * max(1, |partial|) is
/// required before the geometric tail estimate is checked.  The window guards
/// against parity-sparse series in which alternate terms vanish.
class SeriesAccumulator {
  public:
    explicit SeriesAccumulator(double tol, int window = 8)
        : tol_(tol), window_(window) {}

    void add(cplx term) {
        sum_.add(term);
        ++terms_;
        const double mag = std::abs(term);
        if (mag > 0.0) {
            seen_nonzero_ = true;
            prev_mag_ = last_mag_;
            last_mag_ = mag;
        }
        if (mag < tol_ * scale()) {
            ++streak_;
        } else {
            streak_ = 0;
        }
    }

    /// True once the term window is quiet and the extrapolated tail is below
    /// tolerance.  Leading structural zeros (indices pruned by gamma poles)
    /// never count as convergence.
    bool done() const {
        return seen_nonzero_ && streak_ >= window_ &&
               tail_estimate() <= tol_ * scale();
    }

    /// Geometric tail bound from the last two nonzero term magnitudes.
    double tail_estimate() const {
        if (last_mag_ == 0.0) return 0.0;
        double ratio = (prev_mag_ > 0.0) ? last_mag_ / prev_mag_ : 0.5;
        if (ratio > kMaxRatio) ratio = kMaxRatio;
        return last_mag_ * ratio / (1.0 - ratio);
    }

    /// Marks the series as exactly terminated (all further terms vanish).
    void mark_terminated() { terminated_ = true; }

    SeriesEval finalize() const {
        SeriesEval out;
        out.value = sum_.value();
        out.terms_used = terms_;
        out.tail_estimate = terminated_ ? 0.0 : tail_estimate();
        out.converged = terminated_ || out.tail_estimate <= tol_ * scale();
        return out;
    }

    cplx partial() const { return sum_.value(); }
    std::size_t terms() const { return terms_; }

  private:
    double scale() const { return std::max(1.0, std::abs(sum_.value())); }

    static constexpr double kMaxRatio = 0.9999995;
    KahanSum sum_;
    double tol_;
    int window_;
    int streak_ = 0;
    std::size_t terms_ = 0;
    double last_mag_ = 0.0;
    double prev_mag_ = 0.0;
    bool seen_nonzero_ = false;
    bool terminated_ = false;
};

}  // namespace lgf
