//! Trigonometric interpolation on a uniform periodic grid.
//!
//! All differentiation of support functions is spectral: the samples are
//! expanded in a finite Fourier series, derivatives act on coefficients, and
//! values off the grid come from evaluating the interpolant. For an even
//! number of samples `n` the representable modes are `0..=n/2`, with the
//! Nyquist mode carried as a pure cosine.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

/// Fourier coefficients of a real periodic sample vector.
#[derive(Clone, Debug)]
pub struct Spectral {
    n: usize,
    /// Cosine coefficients `a[0..=n/2]`; `a[0]` is the mean.
    cos: Vec<f64>,
    /// Sine coefficients `b[0..=n/2]`; `b[0]` and `b[n/2]` are zero.
    sin: Vec<f64>,
}

impl Spectral {
    /// Analyze `values` sampled at `theta_j = 2 pi j / n`. `n` must be even.
    pub fn from_samples(values: &[f64]) -> Self {
        let n = values.len();
        assert!(n >= 2 && n % 2 == 0, "sample count must be even");
        let mut buf: Vec<Complex<f64>> =
            values.iter().map(|&v| Complex::new(v, 0.0)).collect();
        FftPlanner::new().plan_fft_forward(n).process(&mut buf);
        let half = n / 2;
        let mut cos = vec![0.0; half + 1];
        let mut sin = vec![0.0; half + 1];
        let scale = 1.0 / n as f64;
        cos[0] = buf[0].re * scale;
        for k in 1..half {
            cos[k] = 2.0 * buf[k].re * scale;
            sin[k] = -2.0 * buf[k].im * scale;
        }
        cos[half] = buf[half].re * scale;
        Spectral { n, cos, sin }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Amplitude `sqrt(a_k^2 + b_k^2)` of mode `k`.
    pub fn amplitude(&self, k: usize) -> f64 {
        (self.cos[k] * self.cos[k] + self.sin[k] * self.sin[k]).sqrt()
    }

    /// Evaluate the interpolant at an arbitrary angle.
    pub fn eval(&self, theta: f64) -> f64 {
        let half = self.n / 2;
        let mut acc = self.cos[0];
        for k in 1..half {
            let (s, c) = (k as f64 * theta).sin_cos();
            acc += self.cos[k] * c + self.sin[k] * s;
        }
        acc += self.cos[half] * (half as f64 * theta).cos();
        acc
    }

    /// Evaluate the derivative of the interpolant at an arbitrary angle.
    pub fn eval_deriv(&self, theta: f64) -> f64 {
        let half = self.n / 2;
        let mut acc = 0.0;
        for k in 1..half {
            let kf = k as f64;
            let (s, c) = (kf * theta).sin_cos();
            acc += kf * (self.sin[k] * c - self.cos[k] * s);
        }
        acc -= self.cos[half] * half as f64 * (half as f64 * theta).sin();
        acc
    }

    fn synthesize(&self, mode_factor: impl Fn(usize) -> (f64, f64)) -> Vec<f64> {
        // mode_factor(k) maps (a_k, b_k) |-> (fa*a_k - fb*b_k style) pairs via
        // complex multiplication: factor (re, im) applied to c_k.
        let n = self.n;
        let half = n / 2;
        let mut buf = vec![Complex::new(0.0, 0.0); n];
        let (re0, im0) = mode_factor(0);
        buf[0] = Complex::new(self.cos[0], 0.0) * Complex::new(re0, im0) * n as f64;
        for k in 1..half {
            let c = Complex::new(self.cos[k] / 2.0, -self.sin[k] / 2.0);
            let (re, im) = mode_factor(k);
            let ck = c * Complex::new(re, im) * n as f64;
            buf[k] = ck;
            buf[n - k] = ck.conj();
        }
        let (reh, imh) = mode_factor(half);
        buf[half] = Complex::new(self.cos[half], 0.0) * Complex::new(reh, imh) * n as f64;
        FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
        buf.iter().map(|z| z.re / n as f64).collect()
    }

    /// First derivative at the grid angles. The Nyquist mode contributes a
    /// pure sine there, i.e. nothing, so it is dropped.
    pub fn derivative_on_grid(&self) -> Vec<f64> {
        let half = self.n / 2;
        self.synthesize(|k| {
            if k == 0 || k == half {
                (0.0, 0.0)
            } else {
                (0.0, k as f64)
            }
        })
    }

    /// Second derivative at the grid angles.
    pub fn second_derivative_on_grid(&self) -> Vec<f64> {
        self.synthesize(|k| (-((k * k) as f64), 0.0))
    }

    /// Values at the grid angles of a finer or coarser uniform grid.
    pub fn resample(&self, m: usize) -> Vec<f64> {
        let step = 2.0 * std::f64::consts::PI / m as f64;
        (0..m).map(|j| self.eval(j as f64 * step)).collect()
    }

    /// Zero every mode above `cutoff`; returns the filtered grid values and
    /// the L2 energy removed, `\oint (h - h_lp)^2 d\theta`.
    pub fn low_passed(&self, cutoff: usize) -> (Vec<f64>, f64) {
        let half = self.n / 2;
        let mut removed = 0.0;
        for k in (cutoff + 1).min(half + 1)..=half {
            let w = if k == half { 2.0 } else { 1.0 };
            removed += w * std::f64::consts::PI
                * (self.cos[k] * self.cos[k] + self.sin[k] * self.sin[k]);
        }
        let vals = self.synthesize(|k| if k <= cutoff { (1.0, 0.0) } else { (0.0, 0.0) });
        (vals, removed)
    }

    /// Multiply mode `k` by `exp(-sigma^2 k^2 / 2)` (periodic heat kernel).
    pub fn gaussian_mollified(&self, sigma: f64) -> Vec<f64> {
        self.synthesize(|k| ((-0.5 * sigma * sigma * (k * k) as f64).exp(), 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn sample(n: usize, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..n).map(|j| f(2.0 * PI * j as f64 / n as f64)).collect()
    }

    #[test]
    fn differentiates_trig_polynomials_exactly() {
        let n = 32;
        let s = Spectral::from_samples(&sample(n, |t| {
            1.5 + 0.3 * (3.0 * t).cos() - 0.2 * (5.0 * t).sin()
        }));
        let d1 = s.derivative_on_grid();
        let d2 = s.second_derivative_on_grid();
        for j in 0..n {
            let t = 2.0 * PI * j as f64 / n as f64;
            let want1 = -0.9 * (3.0 * t).sin() - 1.0 * (5.0 * t).cos();
            let want2 = -2.7 * (3.0 * t).cos() + 5.0 * (5.0 * t).sin();
            assert!((d1[j] - want1).abs() < 1e-12, "d1 off at {j}: {} vs {want1}", d1[j]);
            assert!((d2[j] - want2).abs() < 1e-12);
        }
    }

    #[test]
    fn interpolates_between_grid_points() {
        let n = 64;
        let f = |t: f64| 2.0 + 0.25 * (2.0 * t).cos() + 0.1 * (7.0 * t).sin();
        let s = Spectral::from_samples(&sample(n, f));
        for &t in &[0.13, 1.7, 3.9, 6.1] {
            assert!((s.eval(t) - f(t)).abs() < 1e-12);
            let fd = (f(t + 1e-6) - f(t - 1e-6)) / 2e-6;
            assert!((s.eval_deriv(t) - fd).abs() < 1e-5);
        }
    }

    #[test]
    fn low_pass_removes_reported_energy() {
        let n = 32;
        let s = Spectral::from_samples(&sample(n, |t| 1.0 + 0.2 * (10.0 * t).cos()));
        let (vals, removed) = s.low_passed(4);
        for v in &vals {
            assert!((v - 1.0).abs() < 1e-12);
        }
        // \oint (0.2 cos 10t)^2 = 0.04 * pi
        assert!((removed - 0.04 * PI).abs() < 1e-12);
    }
}
