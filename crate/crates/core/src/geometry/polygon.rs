//! Convex polygons: the meshable realization of a body.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strictly convex polygon with counterclockwise vertices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConvexPolygon {
    vertices: Vec<[f64; 2]>,
}

fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

impl ConvexPolygon {
    /// Validate a counterclockwise, strictly convex vertex list.
    pub fn new(vertices: Vec<[f64; 2]>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidInput(format!(
                "polygon needs at least 3 vertices, got {n}"
            )));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v[0].is_finite() || !v[1].is_finite() {
                return Err(Error::InvalidInput(format!(
                    "vertex {i} is not finite: [{}, {}]",
                    v[0], v[1]
                )));
            }
        }
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if cross(sub(b, a), sub(c, b)) <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "vertex sequence is not strictly convex counterclockwise at vertex {}",
                    (i + 1) % n
                )));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut acc = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            acc += cross(a, b);
        }
        acc / 2.0
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let d = sub(self.vertices[(i + 1) % n], self.vertices[i]);
                (d[0] * d[0] + d[1] * d[1]).sqrt()
            })
            .sum()
    }

    pub fn centroid(&self) -> [f64; 2] {
        let n = self.vertices.len();
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut area = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let w = cross(a, b);
            area += w;
            cx += (a[0] + b[0]) * w;
            cy += (a[1] + b[1]) * w;
        }
        area /= 2.0;
        [cx / (6.0 * area), cy / (6.0 * area)]
    }

    /// Support value `max_v v . dir` (dir need not be unit).
    pub fn support(&self, dir: [f64; 2]) -> f64 {
        self.vertices
            .iter()
            .map(|v| v[0] * dir[0] + v[1] * dir[1])
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Outward unit normal, support value, and length of edge `i`
    /// (from vertex `i` to vertex `i+1`).
    pub fn edge(&self, i: usize) -> EdgeData {
        let n = self.vertices.len();
        let a = self.vertices[i];
        let b = self.vertices[(i + 1) % n];
        let d = sub(b, a);
        let len = (d[0] * d[0] + d[1] * d[1]).sqrt();
        let normal = [d[1] / len, -d[0] / len];
        EdgeData {
            normal,
            support: a[0] * normal[0] + a[1] * normal[1],
            len,
        }
    }

    /// Strict origin-in-interior test: every edge line has positive support.
    pub fn contains_origin(&self) -> bool {
        (0..self.vertices.len()).all(|i| self.edge(i).support > 0.0)
    }

    pub fn translated(&self, shift: [f64; 2]) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|v| [v[0] + shift[0], v[1] + shift[1]])
                .collect(),
        }
    }

    pub fn scaled(&self, s: f64) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| [v[0] * s, v[1] * s]).collect(),
        }
    }
}

/// Per-edge geometric data of a polygon boundary.
#[derive(Clone, Copy, Debug)]
pub struct EdgeData {
    pub normal: [f64; 2],
    pub support: f64,
    pub len: f64,
}

/// Andrew monotone chain; returns hull point indices in counterclockwise
/// order. Collinear points are dropped.
pub(crate) fn convex_hull(points: &[[f64; 2]]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| {
        points[i]
            .partial_cmp(&points[j])
            .expect("non-finite point in hull input")
    });
    idx.dedup_by(|&mut i, &mut j| points[i] == points[j]);
    if idx.len() < 3 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(idx.len() + 1);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2 {
                let a = points[hull[hull.len() - 2]];
                let b = points[hull[hull.len() - 1]];
                if cross(sub(b, a), sub(points[i], b)) <= 0.0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// Intersection of the halfspaces `{ x . dir_i <= support_i }` as a polygon.
///
/// The directions must be unit vectors; all supports must be positive, so the
/// intersection contains a ball around the origin. The active constraints are
/// found as the convex hull of the polar points `dir_i / support_i`, and the
/// polygon vertices are intersections of consecutive active constraint lines.
pub fn halfspace_intersection(dirs: &[[f64; 2]], supports: &[f64]) -> Result<ConvexPolygon> {
    assert_eq!(dirs.len(), supports.len());
    let polar: Vec<[f64; 2]> = dirs
        .iter()
        .zip(supports)
        .map(|(d, &c)| [d[0] / c, d[1] / c])
        .collect();
    let hull = convex_hull(&polar);
    if hull.len() < 3 {
        return Err(Error::DegenerateIntersection);
    }
    let mut vertices = Vec::with_capacity(hull.len());
    let scale = supports.iter().cloned().fold(0.0f64, f64::max);
    for w in 0..hull.len() {
        let i = hull[w];
        let j = hull[(w + 1) % hull.len()];
        let (ni, nj) = (dirs[i], dirs[j]);
        let det = ni[0] * nj[1] - ni[1] * nj[0];
        if det.abs() < 1e-14 {
            return Err(Error::DegenerateIntersection);
        }
        let x = (supports[i] * nj[1] - supports[j] * ni[1]) / det;
        let y = (supports[j] * ni[0] - supports[i] * nj[0]) / det;
        vertices.push([x, y]);
    }
    // Three constraints meeting at a point produce duplicate vertices.
    let mut dedup: Vec<[f64; 2]> = Vec::with_capacity(vertices.len());
    for v in vertices {
        if let Some(last) = dedup.last() {
            if (v[0] - last[0]).abs() + (v[1] - last[1]).abs() <= 1e-12 * scale {
                continue;
            }
        }
        dedup.push(v);
    }
    while dedup.len() >= 2 {
        let first = dedup[0];
        let last = *dedup.last().unwrap();
        if (first[0] - last[0]).abs() + (first[1] - last[1]).abs() <= 1e-12 * scale {
            dedup.pop();
        } else {
            break;
        }
    }
    let poly = ConvexPolygon::new(dedup).map_err(|_| Error::DegenerateIntersection)?;
    if poly.area() <= 0.0 {
        return Err(Error::DegenerateIntersection);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square2() -> ConvexPolygon {
        ConvexPolygon::new(vec![[1.0, -1.0], [1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0]]).unwrap()
    }

    #[test]
    fn rejects_clockwise_and_collinear() {
        assert!(ConvexPolygon::new(vec![[0.0, 0.0], [0.0, 1.0], [1.0, 0.0]]).is_err());
        assert!(
            ConvexPolygon::new(vec![[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [1.0, 1.0]]).is_err()
        );
    }

    #[test]
    fn square_measures() {
        let p = square2();
        assert!((p.area() - 4.0).abs() < 1e-14);
        assert!((p.perimeter() - 8.0).abs() < 1e-14);
        let c = p.centroid();
        assert!(c[0].abs() < 1e-15 && c[1].abs() < 1e-15);
        assert!(p.contains_origin());
        assert!((p.support([1.0, 0.0]) - 1.0).abs() < 1e-15);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((p.support([s, s]) - 2.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn halfspaces_cut_square() {
        // Four axis halfspaces at distance 1 plus slack diagonal ones.
        let mut dirs = vec![[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
        let mut sup = vec![1.0, 1.0, 1.0, 1.0];
        let s = std::f64::consts::FRAC_1_SQRT_2;
        dirs.push([s, s]);
        sup.push(5.0);
        let p = halfspace_intersection(&dirs, &sup).unwrap();
        assert_eq!(p.len(), 4);
        assert!((p.area() - 4.0).abs() < 1e-12);
    }
}
