#pragma once
// Chebyshev interpolation on a finite interval: construction from function
// samples at Chebyshev points of the second kind, Clenshaw evaluation,
// spectral differentiation in coefficient space, and noise-plateau
// truncation so that repeated derivatives stay stable.

#include <functional>
#include <vector>

namespace limdist {

class ChebInterp {
  public:
    // Interpolates f at n+1 Chebyshev points of the second kind on [a, b].
    ChebInterp(const std::function<double(double)>& f, double a, double b, int n);
    // Wraps existing Chebyshev coefficients c_0..c_n on [a, b].
    ChebInterp(std::vector<double> coeffs, double a, double b);

    double operator()(double x) const;  // Clenshaw
    // k-th derivative as a new interpolant; coefficients below the noise
    // plateau are dropped first so differentiation does not amplify noise.
    ChebInterp derivative(int k = 1) const;
    // Antiderivative vanishing at a.
    ChebInterp antiderivative() const;
    double integrate() const;  // integral over [a, b]

    const std::vector<double>& coefficients() const { return c_; }
    double lower() const { return a_; }
    double upper() const { return b_; }

    // Index of the last coefficient above `rel_tol` times the max magnitude;
    // used to check the sampling resolved the function.
    int plateau_index(double rel_tol = 1e-13) const;

  private:
    std::vector<double> c_;
    double a_, b_;
};

// Piecewise-Chebyshev function on contiguous panels: keeps per-panel degree
// moderate so that high derivatives remain accurate over long intervals.
class PanelledCheb {
  public:
    // Breakpoints x_0 < ... < x_p; n+1 points per panel.
    PanelledCheb(const std::function<double(double)>& f, const std::vector<double>& breakpoints,
                 int n);

    double operator()(double x) const;
    PanelledCheb derivative(int k = 1) const;
    double integrate() const;

    double lower() const { return panels_.front().lower(); }
    double upper() const { return panels_.back().upper(); }
    const std::vector<ChebInterp>& panels() const { return panels_; }

  private:
    explicit PanelledCheb(std::vector<ChebInterp> panels) : panels_(std::move(panels)) {}
    std::vector<ChebInterp> panels_;
};

}  // namespace limdist
