//! Convex bodies in the plane, represented by support functions sampled on a
//! uniform angle grid.
//!
//! The support function `h(theta)` of a body with the origin in its interior
//! is strictly positive; discrete convexity means the radius of curvature
//! `r = h + h''` (spectral second derivative) is positive at every grid
//! angle. The inverse Gauss map sends the grid angle `theta` to the boundary
//! point `h(theta) xi + h'(theta) xi_perp` with outward normal `xi`.

mod polygon;

pub use polygon::{halfspace_intersection, ConvexPolygon, EdgeData};

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::Spectral;

/// Smallest admissible angle grid.
pub const MIN_ANGLES: usize = 16;

/// Relative convexity tolerance: bodies with `r < eps * mean(h)` anywhere are
/// rejected by curvature-consuming operations.
pub const CONVEXITY_EPS: f64 = 1e-10;

/// Uniform grid `theta_i = 2 pi i / n` on the circle; `n` even so the grid is
/// closed under the antipodal map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngleGrid {
    n: usize,
}

impl AngleGrid {
    pub fn new(n_angles: usize) -> Result<Self> {
        if n_angles < MIN_ANGLES || n_angles % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "angle grid must be even and at least {MIN_ANGLES}, got {n_angles}"
            )));
        }
        Ok(AngleGrid { n: n_angles })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta(&self, i: usize) -> f64 {
        2.0 * PI * (i % self.n) as f64 / self.n as f64
    }

    /// Grid spacing `2 pi / n`.
    pub fn delta(&self) -> f64 {
        2.0 * PI / self.n as f64
    }

    /// Index of the antipodal angle `theta + pi`.
    pub fn opposite(&self, i: usize) -> usize {
        (i + self.n / 2) % self.n
    }

    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.theta(i))
    }

    pub fn direction(&self, i: usize) -> [f64; 2] {
        let (s, c) = self.theta(i).sin_cos();
        [c, s]
    }
}

/// A convex body as sampled support function. Immutable after construction;
/// the Fourier coefficients are derived from the samples once.
#[derive(Clone, Debug)]
pub struct SupportFunction {
    grid: AngleGrid,
    values: Vec<f64>,
    spectral: Spectral,
}

impl SupportFunction {
    /// Build from samples, enforcing positivity (origin interior).
    pub fn new(grid: AngleGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} support values, got {}",
                grid.len(),
                values.len()
            )));
        }
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::OriginOutside { index: i, value: v });
            }
        }
        let spectral = Spectral::from_samples(&values);
        Ok(SupportFunction {
            grid,
            values,
            spectral,
        })
    }

    /// Sample a closure at the grid angles.
    pub fn from_fn(grid: AngleGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(grid, grid.angles().map(f).collect())
    }

    pub fn grid(&self) -> AngleGrid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i % self.grid.len()]
    }

    pub fn spectral(&self) -> &Spectral {
        &self.spectral
    }

    pub fn mean_radius(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Max width over grid directions; used as the diameter scale.
    pub fn diameter(&self) -> f64 {
        (0..self.grid.len())
            .map(|i| self.values[i] + self.values[self.grid.opposite(i)])
            .fold(0.0, f64::max)
    }

    /// Radii of curvature `r_i = h_i + h''_i` (spectral second derivative).
    /// Also serves as the convexity test: the body is discretely convex iff
    /// all entries exceed the convexity tolerance.
    pub fn curvature_radius(&self) -> Vec<f64> {
        let d2 = self.spectral.second_derivative_on_grid();
        self.values.iter().zip(d2).map(|(&h, s)| h + s).collect()
    }

    pub fn convexity_threshold(&self) -> f64 {
        CONVEXITY_EPS * self.mean_radius()
    }

    /// Err with the offending index if any radius of curvature is below the
    /// convexity tolerance.
    pub fn require_convex(&self) -> Result<Vec<f64>> {
        let r = self.curvature_radius();
        let eps = self.convexity_threshold();
        for (i, &ri) in r.iter().enumerate() {
            if ri <= eps {
                return Err(Error::NonConvex {
                    index: i,
                    min_radius: ri,
                });
            }
        }
        Ok(r)
    }

    pub fn is_convex(&self) -> bool {
        self.require_convex().is_ok()
    }

    /// Gauss curvature `G_i = 1 / r_i` at the grid angles.
    pub fn gauss_curvature(&self) -> Result<Vec<f64>> {
        Ok(self.require_convex()?.iter().map(|r| 1.0 / r).collect())
    }

    /// Inverse Gauss map: the boundary point whose outward normal is
    /// `(cos theta, sin theta)`.
    pub fn boundary_point(&self, theta: f64) -> Result<[f64; 2]> {
        self.require_convex()?;
        Ok(self.boundary_point_unchecked(theta))
    }

    fn boundary_point_unchecked(&self, theta: f64) -> [f64; 2] {
        let h = self.spectral.eval(theta);
        let dh = self.spectral.eval_deriv(theta);
        let (s, c) = theta.sin_cos();
        [h * c - dh * s, h * s + dh * c]
    }

    /// Boundary points at every grid angle.
    pub fn boundary_points(&self) -> Result<Vec<[f64; 2]>> {
        self.require_convex()?;
        let dh = self.spectral.derivative_on_grid();
        Ok((0..self.grid.len())
            .map(|i| {
                let (s, c) = self.grid.theta(i).sin_cos();
                let h = self.values[i];
                [h * c - dh[i] * s, h * s + dh[i] * c]
            })
            .collect())
    }

    /// Area enclosed, by the spectral quadrature `1/2 \oint h (h + h'') dtheta`.
    pub fn volume(&self) -> Result<f64> {
        let r = self.require_convex()?;
        let quad: f64 = self.values.iter().zip(&r).map(|(&h, &ri)| h * ri).sum();
        Ok(0.5 * quad * self.grid.delta())
    }

    /// Boundary length `\oint r dtheta`.
    pub fn perimeter(&self) -> Result<f64> {
        let r = self.require_convex()?;
        Ok(r.iter().sum::<f64>() * self.grid.delta())
    }

    /// Area of the polar body, `1/2 \oint h^{-2} dtheta`. Needs no convexity,
    /// only positivity (guaranteed by construction).
    pub fn polar_volume(&self) -> f64 {
        let quad: f64 = self.values.iter().map(|&h| 1.0 / (h * h)).sum();
        0.5 * quad * self.grid.delta()
    }

    /// Sup-norm of the support difference; the exact Hausdorff distance for
    /// convex bodies on a shared grid.
    pub fn hausdorff_distance(&self, other: &SupportFunction) -> Result<f64> {
        self.check_grid(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Minimal width `min_i h(theta_i) + h(theta_i + pi)`.
    pub fn min_width(&self) -> f64 {
        (0..self.grid.len())
            .map(|i| self.values[i] + self.values[self.grid.opposite(i)])
            .fold(f64::INFINITY, f64::min)
    }

    /// Centroid via the boundary quadrature
    /// `cen = (1/(3|K|)) \oint x(theta) h(theta) r(theta) dtheta`.
    pub fn centroid(&self) -> Result<[f64; 2]> {
        let r = self.require_convex()?;
        let pts = self.boundary_points()?;
        let vol = self.volume()?;
        let mut cx = 0.0;
        let mut cy = 0.0;
        for i in 0..self.grid.len() {
            let w = self.values[i] * r[i];
            cx += pts[i][0] * w;
            cy += pts[i][1] * w;
        }
        let scale = self.grid.delta() / (3.0 * vol);
        Ok([cx * scale, cy * scale])
    }

    /// Translate the body by `shift`: `h(theta) - shift . xi(theta)` ... with
    /// the sign such that the body moves by `-shift` when subtracting. Here we
    /// move the body by `shift`, i.e. the new support is `h + shift . xi`.
    pub fn translated(&self, shift: [f64; 2]) -> Result<SupportFunction> {
        let vals: Vec<f64> = (0..self.grid.len())
            .map(|i| {
                let d = self.grid.direction(i);
                self.values[i] + shift[0] * d[0] + shift[1] * d[1]
            })
            .collect();
        SupportFunction::new(self.grid, vals)
    }

    pub fn scaled(&self, s: f64) -> Result<SupportFunction> {
        if s <= 0.0 || !s.is_finite() {
            return Err(Error::InvalidInput(format!("scale must be positive, got {s}")));
        }
        SupportFunction::new(self.grid, self.values.iter().map(|h| h * s).collect())
    }

    /// Pointwise maximum of the antipodal support gap.
    pub fn asymmetry(&self) -> f64 {
        (0..self.grid.len())
            .map(|i| (self.values[i] - self.values[self.grid.opposite(i)]).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_centrally_symmetric(&self, tol: f64) -> bool {
        self.asymmetry() <= tol
    }

    /// Zero all Fourier modes above `cutoff`; returns the filtered body and
    /// the L2 energy removed.
    pub fn low_passed(&self, cutoff: usize) -> Result<(SupportFunction, f64)> {
        let (vals, removed) = self.spectral.low_passed(cutoff);
        Ok((SupportFunction::new(self.grid, vals)?, removed))
    }

    /// Convolve with the periodic heat kernel of width `sigma` (radians).
    /// Mollification preserves convexity: `r = h + h''` is convolved with a
    /// nonnegative kernel.
    pub fn mollified(&self, sigma: f64) -> Result<SupportFunction> {
        SupportFunction::new(self.grid, self.spectral.gaussian_mollified(sigma))
    }

    /// Trigonometric resampling onto another grid.
    pub fn resampled(&self, grid: AngleGrid) -> Result<SupportFunction> {
        SupportFunction::new(grid, self.spectral.resample(grid.len()))
    }

    pub(crate) fn check_grid(&self, other: &SupportFunction) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch {
                left: self.grid.len(),
                right: other.grid.len(),
            });
        }
        Ok(())
    }
}

/// Scalar descriptors of a body.
#[derive(Clone, Debug, Serialize)]
pub struct BodySummary {
    pub volume: f64,
    pub centroid: [f64; 2],
    pub min_width: f64,
    pub hausdorff_to_best_disk: f64,
    pub is_centrally_symmetric: bool,
}

/// Exact support samples of a polygon on the grid.
pub fn support_from_polygon(p: &ConvexPolygon, grid: AngleGrid) -> Result<SupportFunction> {
    let values: Vec<f64> = (0..grid.len())
        .map(|i| p.support(grid.direction(i)))
        .collect();
    for (i, &v) in values.iter().enumerate() {
        if v <= 0.0 {
            return Err(Error::OriginOutside { index: i, value: v });
        }
    }
    SupportFunction::new(grid, values)
}

/// Inscribed polygon through the inverse Gauss map at every grid angle.
pub fn polygon_from_support(h: &SupportFunction) -> Result<ConvexPolygon> {
    let pts = h.boundary_points()?;
    ConvexPolygon::new(pts).map_err(|_| {
        // A discretely convex body always yields a strictly convex chain;
        // reaching this means the convexity margin is below geometric noise.
        Error::NonConvex {
            index: 0,
            min_radius: 0.0,
        }
    })
}

/// Pointwise sum of support functions (Minkowski sum of the bodies).
pub fn minkowski_sum(a: &SupportFunction, b: &SupportFunction) -> Result<SupportFunction> {
    a.check_grid(b)?;
    SupportFunction::new(
        a.grid(),
        a.values().iter().zip(b.values()).map(|(x, y)| x + y).collect(),
    )
}

/// The 0-combination `(1-lambda) . K +_0 lambda . L`: the body cut out by the
/// halfspaces with support bound `h_K^{1-lambda} h_L^lambda`, returned as its
/// exact support samples. The result is dominated by the pointwise geometric
/// mean at every grid angle.
pub fn log_minkowski_combination(
    a: &SupportFunction,
    b: &SupportFunction,
    lambda: f64,
) -> Result<SupportFunction> {
    a.check_grid(b)?;
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidInput(format!(
            "lambda must lie in [0, 1], got {lambda}"
        )));
    }
    let grid = a.grid();
    let bounds: Vec<f64> = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(&ha, &hb)| ha.powf(1.0 - lambda) * hb.powf(lambda))
        .collect();
    let dirs: Vec<[f64; 2]> = (0..grid.len()).map(|i| grid.direction(i)).collect();
    let poly = halfspace_intersection(&dirs, &bounds)?;
    support_from_polygon(&poly, grid)
}

/// Centroid, summary statistics, and the recentered body (support of the
/// translate with centroid at the origin).
pub fn centroid_and_center(h: &SupportFunction) -> Result<(BodySummary, SupportFunction)> {
    let cen = h.centroid()?;
    let centered = h.translated([-cen[0], -cen[1]])?;
    let mean = centered.mean_radius();
    let best_disk_gap = centered
        .values()
        .iter()
        .map(|v| (v - mean).abs())
        .fold(0.0, f64::max);
    let summary = BodySummary {
        volume: h.volume()?,
        centroid: cen,
        min_width: h.min_width(),
        hausdorff_to_best_disk: best_disk_gap,
        is_centrally_symmetric: centered.is_centrally_symmetric(1e-8 * mean),
    };
    Ok((summary, centered))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn grid(n: usize) -> AngleGrid {
        AngleGrid::new(n).unwrap()
    }

    fn disk(r: f64, n: usize) -> SupportFunction {
        SupportFunction::from_fn(grid(n), |_| r).unwrap()
    }

    fn ellipse(a: f64, b: f64, n: usize) -> SupportFunction {
        SupportFunction::from_fn(grid(n), |t| {
            let (s, c) = t.sin_cos();
            (a * a * c * c + b * b * s * s).sqrt()
        })
        .unwrap()
    }

    fn square_polygon(half: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            [half, -half],
            [half, half],
            [-half, half],
            [-half, -half],
        ])
        .unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(AngleGrid::new(15).is_err());
        assert!(AngleGrid::new(14).is_err());
        assert!(AngleGrid::new(16).is_ok());
        let g = grid(32);
        assert_eq!(g.opposite(3), 19);
        assert!((g.theta(8) - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn support_of_squares() {
        // Unit square centered at the origin: h(0) = half side.
        let h = support_from_polygon(&square_polygon(0.5), grid(64)).unwrap();
        assert!((h.value(0) - 0.5).abs() < 1e-15);
        // Square [-1,1]^2 at theta = pi/4: corner support sqrt(2).
        let h2 = support_from_polygon(&square_polygon(1.0), grid(64)).unwrap();
        assert!((h2.value(8) - 2.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn support_of_regular_ngon() {
        // Regular n-gon inscribed in the unit circle: max h = 1 (vertex
        // directions), min h = cos(pi/n) (apothem).
        let n = 16;
        let verts: Vec<[f64; 2]> = (0..n)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / n as f64;
                [t.cos(), t.sin()]
            })
            .collect();
        let p = ConvexPolygon::new(verts).unwrap();
        let h = support_from_polygon(&p, grid(256)).unwrap();
        let max = h.values().iter().cloned().fold(0.0, f64::max);
        let min = h.values().iter().cloned().fold(f64::INFINITY, f64::min);
        assert!((max - 1.0).abs() < 1e-12);
        assert!((min - (PI / n as f64).cos()).abs() < 1e-12);
    }

    #[test]
    fn origin_outside_rejected() {
        let p = square_polygon(0.5).translated([2.0, 0.0]);
        assert!(matches!(
            support_from_polygon(&p, grid(64)),
            Err(Error::OriginOutside { .. })
        ));
    }

    #[test]
    fn boundary_points_disk_and_ellipse() {
        let d = disk(2.0, 64);
        let p = d.boundary_point(0.7).unwrap();
        assert!((p[0] - 2.0 * 0.7f64.cos()).abs() < 1e-12);
        assert!((p[1] - 2.0 * 0.7f64.sin()).abs() < 1e-12);

        let e = ellipse(2.0, 1.0, 256);
        let p0 = e.boundary_point(0.0).unwrap();
        assert!((p0[0] - 2.0).abs() < 1e-10 && p0[1].abs() < 1e-10);

        // Shifted disk h = R + c cos(theta): at theta = pi/2 the point is (c, R).
        let c = 0.3;
        let sh = SupportFunction::from_fn(grid(64), |t| 1.0 + c * t.cos()).unwrap();
        let q = sh.boundary_point(PI / 2.0).unwrap();
        assert!((q[0] - c).abs() < 1e-12 && (q[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn polygon_from_unit_support_is_regular() {
        let h = disk(1.0, 64);
        let p = polygon_from_support(&h).unwrap();
        assert_eq!(p.len(), 64);
        for v in p.vertices() {
            assert!(((v[0] * v[0] + v[1] * v[1]).sqrt() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn round_trip_error_second_order() {
        // At the grid angles the round trip is exact by construction; the
        // O(delta^2) inscription error lives between them, so evaluate both
        // supports on a fine probe grid. Halving the spacing shrinks the
        // error by >= 3.
        let truth = |t: f64| {
            let (s, c) = t.sin_cos();
            (4.0 * c * c + s * s).sqrt()
        };
        let mut errs = Vec::new();
        for &n in &[128usize, 256] {
            let e = ellipse(2.0, 1.0, n);
            let p = polygon_from_support(&e).unwrap();
            let mut worst: f64 = 0.0;
            for k in 0..4096 {
                let t = 2.0 * PI * k as f64 / 4096.0;
                worst = worst.max((p.support([t.cos(), t.sin()]) - truth(t)).abs());
            }
            errs.push(worst);
        }
        assert!(errs[1] <= 1e-3, "fine-grid round-trip error {}", errs[1]);
        assert!(errs[0] / errs[1] >= 3.0, "ratio {}", errs[0] / errs[1]);
    }

    #[test]
    fn square_round_trip_within_corner_resolution() {
        let n = 256;
        let sq = square_polygon(0.5);
        let h = support_from_polygon(&sq, grid(n)).unwrap();
        // The sampled support is not discretely convex at the corners, so the
        // polygon is rebuilt from the raw halfspaces instead of the Gauss map.
        let dirs: Vec<[f64; 2]> = (0..n).map(|i| h.grid().direction(i)).collect();
        let outer = halfspace_intersection(&dirs, h.values()).unwrap();
        let fine = 4096;
        let mut worst: f64 = 0.0;
        for k in 0..fine {
            let t = 2.0 * PI * k as f64 / fine as f64;
            let dir = [t.cos(), t.sin()];
            worst = worst.max((outer.support(dir) - sq.support(dir)).abs());
        }
        assert!(
            worst <= 2.0 * PI / n as f64,
            "Hausdorff gap {worst} exceeds corner resolution"
        );
    }

    #[test]
    fn minkowski_sum_of_disks() {
        let a = disk(1.0, 64);
        let b = disk(0.5, 64);
        let s = minkowski_sum(&a, &b).unwrap();
        assert!(s.values().iter().all(|&v| (v - 1.5).abs() < 1e-14));
        let sq = support_from_polygon(&square_polygon(1.0), grid(64)).unwrap();
        let rounded = minkowski_sum(&sq, &b).unwrap();
        for i in 0..64 {
            assert!((rounded.value(i) - sq.value(i) - 0.5).abs() < 1e-14);
        }
        let other = disk(1.0, 32);
        assert!(matches!(
            minkowski_sum(&a, &other),
            Err(Error::GridMismatch { .. })
        ));
    }

    #[test]
    fn volume_and_polar_volume() {
        let d = disk(2.0, 64);
        assert!((d.volume().unwrap() - 4.0 * PI).abs() < 1e-12);
        assert!((d.polar_volume() - PI / 4.0).abs() < 1e-12);

        let e = ellipse(2.0, 1.0, 256);
        assert!((e.volume().unwrap() - 2.0 * PI).abs() < 1e-9);

        // Unit disk is self-polar.
        let u = disk(1.0, 64);
        assert!((u.polar_volume() - PI).abs() < 1e-12);
    }

    #[test]
    fn polar_volume_of_square_is_diamond_area() {
        // Polar of [-1,1]^2 is the diamond |x|+|y| <= 1 with area 2; the
        // integrand has kinks exactly at grid points, trapezoid stays O(n^-2).
        let h = support_from_polygon(&square_polygon(1.0), grid(4096)).unwrap();
        assert!((h.polar_volume() - 2.0).abs() < 1e-5);
    }

    #[test]
    fn curvature_radius_formulas() {
        let d = disk(2.0, 64);
        assert!(d.curvature_radius().iter().all(|r| (r - 2.0).abs() < 1e-12));
        assert!(d.gauss_curvature().unwrap().iter().all(|g| (g - 0.5).abs() < 1e-12));

        let e = ellipse(2.0, 1.0, 256);
        let r = e.curvature_radius();
        assert!((r[0] - 1.0 / 2.0).abs() < 1e-9, "r(0) = b^2/a, got {}", r[0]);

        // Linearity on Fourier modes: h = 1 + 0.1 cos 3theta gives
        // r = 1 - 0.8 cos 3theta.
        let w = SupportFunction::from_fn(grid(64), |t| 1.0 + 0.1 * (3.0 * t).cos()).unwrap();
        let rw = w.curvature_radius();
        for i in 0..64 {
            let t = w.grid().theta(i);
            assert!((rw[i] - (1.0 - 0.8 * (3.0 * t).cos())).abs() < 1e-12);
        }
    }

    #[test]
    fn hausdorff_and_width() {
        let a = disk(1.0, 64);
        let b = disk(1.1, 64);
        assert_eq!(a.hausdorff_distance(&a).unwrap(), 0.0);
        assert!((a.hausdorff_distance(&b).unwrap() - 0.1).abs() < 1e-14);

        assert!((disk(1.5, 64).min_width() - 3.0).abs() < 1e-14);
        let e = ellipse(2.0, 1.0, 256);
        assert!((e.min_width() - 2.0).abs() < 1e-10);
        let rect = support_from_polygon(
            &ConvexPolygon::new(vec![[1.5, -0.5], [1.5, 0.5], [-1.5, 0.5], [-1.5, -0.5]])
                .unwrap(),
            grid(64),
        )
        .unwrap();
        assert!((rect.min_width() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn log_minkowski_endpoints_and_idempotence() {
        let e = ellipse(1.5, 1.0, 128);
        let d = disk(1.0, 128);
        let at0 = log_minkowski_combination(&e, &d, 0.0).unwrap();
        assert!(e.hausdorff_distance(&at0).unwrap() < 1e-12);
        let same = log_minkowski_combination(&e, &e, 0.37).unwrap();
        assert!(e.hausdorff_distance(&same).unwrap() < 1e-12);
        // Dominated by the geometric mean pointwise.
        let mid = log_minkowski_combination(&e, &d, 0.5).unwrap();
        for i in 0..128 {
            let gm = e.value(i).powf(0.5) * d.value(i).powf(0.5);
            assert!(mid.value(i) <= gm + 1e-12);
        }
    }

    #[test]
    fn log_minkowski_of_rectangles_is_rectangle() {
        // (1-lambda) . R_l1 +_0 lambda . R_l2 = R_l with l = l1^(1-l) l2^l,
        // for centered boxes of height 1.
        let g = grid(256);
        let rect = |l: f64| {
            support_from_polygon(
                &ConvexPolygon::new(vec![
                    [l / 2.0, -0.5],
                    [l / 2.0, 0.5],
                    [-l / 2.0, 0.5],
                    [-l / 2.0, -0.5],
                ])
                .unwrap(),
                g,
            )
            .unwrap()
        };
        let (l1, l2, lam) = (1.0, 4.0, 0.5);
        let combo = log_minkowski_combination(&rect(l1), &rect(l2), lam).unwrap();
        let expect = rect(l1.powf(1.0 - lam) * l2.powf(lam));
        assert!(combo.hausdorff_distance(&expect).unwrap() < 1e-10);
    }

    #[test]
    fn centering_removes_shifts_and_is_idempotent() {
        let d = disk(1.0, 128);
        let shifted = d.translated([0.3, 0.0]).unwrap();
        let (summary, centered) = centroid_and_center(&shifted).unwrap();
        assert!((summary.centroid[0] - 0.3).abs() < 1e-10);
        assert!(summary.centroid[1].abs() < 1e-10);
        assert!(centered.hausdorff_distance(&d).unwrap() < 1e-10);

        let (s2, again) = centroid_and_center(&centered).unwrap();
        assert!(s2.centroid[0].abs() < 1e-12 && s2.centroid[1].abs() < 1e-12);
        assert!(again.hausdorff_distance(&centered).unwrap() < 1e-8 * centered.diameter());
    }

    #[test]
    fn summary_flags() {
        let e = ellipse(2.0, 1.0, 256);
        let (s, _) = centroid_and_center(&e).unwrap();
        assert!(s.is_centrally_symmetric);
        assert!((s.min_width - 2.0).abs() < 1e-9);
        assert!(s.volume > 0.0 && s.min_width <= e.diameter());

        // Odd mode >= 3 survives recentering, so the flag must stay off.
        let lop =
            SupportFunction::from_fn(grid(128), |t| 1.0 + 0.05 * (3.0 * t).cos()).unwrap();
        let (s2, _) = centroid_and_center(&lop).unwrap();
        assert!(!s2.is_centrally_symmetric);
    }
}
