//! Triangulation of convex bodies.
//!
//! The boundary chain is laid down first (polygon vertices plus equally
//! spaced refinement nodes on long edges), then a hexagonal lattice fills the
//! interior, a Delaunay triangulation connects everything, and a few
//! Laplacian smoothing sweeps with re-triangulation even out the transition
//! band. Boundary nodes always occupy indices `0..n_boundary` in loop order,
//! so the Dirichlet set needs no lookup table. Construction is deterministic
//! in the inputs.

use delaunator::{triangulate, Point};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{polygon_from_support, AngleGrid, ConvexPolygon, SupportFunction};

/// Minimum acceptable triangle angle, degrees.
pub const MIN_ANGLE_DEG: f64 = 20.0;

/// One straight boundary segment, counterclockwise from node `a` to `b`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryEdge {
    pub a: usize,
    pub b: usize,
    /// Index of the polygon edge this segment discretizes.
    pub source_edge: usize,
    /// Outward unit normal of the source edge.
    pub normal: [f64; 2],
    /// Support value `x . normal` of the source edge line.
    pub support: f64,
    pub len: f64,
}

/// Binding between mesh boundary nodes and the angle grid of the body the
/// mesh discretizes (smooth-body meshes only).
#[derive(Clone, Debug)]
pub struct GridBinding {
    pub grid: AngleGrid,
    /// Mesh node carrying the boundary point of each grid angle.
    pub node_of_angle: Vec<usize>,
}

/// Conforming P1 triangulation of a convex polygon.
#[derive(Clone, Debug)]
pub struct TriangleMesh {
    pub nodes: Vec<[f64; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub boundary: Vec<BoundaryEdge>,
    pub n_boundary: usize,
    pub grid_binding: Option<GridBinding>,
}

impl TriangleMesh {
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_boundary(&self, node: usize) -> bool {
        node < self.n_boundary
    }

    pub fn boundary_perimeter(&self) -> f64 {
        self.boundary.iter().map(|e| e.len).sum()
    }

    /// Smallest triangle angle in degrees.
    pub fn min_angle_deg(&self) -> f64 {
        let mut worst = f64::INFINITY;
        for t in &self.triangles {
            worst = worst.min(min_angle_of(&self.nodes, t));
        }
        worst.to_degrees()
    }

    pub fn triangle_area(&self, t: &[usize; 3]) -> f64 {
        let [a, b, c] = [self.nodes[t[0]], self.nodes[t[1]], self.nodes[t[2]]];
        0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
    }

    pub fn area(&self) -> f64 {
        self.triangles.iter().map(|t| self.triangle_area(t)).sum()
    }
}

fn min_angle_of(nodes: &[[f64; 2]], t: &[usize; 3]) -> f64 {
    let p = [nodes[t[0]], nodes[t[1]], nodes[t[2]]];
    let mut worst = f64::INFINITY;
    for k in 0..3 {
        let a = p[k];
        let b = p[(k + 1) % 3];
        let c = p[(k + 2) % 3];
        let u = [b[0] - a[0], b[1] - a[1]];
        let v = [c[0] - a[0], c[1] - a[1]];
        let dot = u[0] * v[0] + u[1] * v[1];
        let crs = u[0] * v[1] - u[1] * v[0];
        worst = worst.min(crs.atan2(dot).abs());
    }
    worst
}

/// Mesh a smooth body given by its support function. Boundary nodes at the
/// grid angles are exactly the inverse Gauss map points; the binding records
/// which mesh node carries which angle.
pub fn mesh_body(h: &SupportFunction, target_h: f64) -> Result<TriangleMesh> {
    let diameter = h.diameter();
    if !(target_h > 0.0) || target_h > diameter / 8.0 {
        return Err(Error::MeshFailure(format!(
            "target size {target_h} exceeds diameter/8 = {}",
            diameter / 8.0
        )));
    }
    let poly = polygon_from_support(h)?;
    let mut mesh = mesh_convex_polygon(&poly, target_h)?;
    // Chain construction puts polygon vertex k at the cumulative position of
    // the subdivision counts; recover it from the boundary edges.
    let mut node_of_angle = Vec::with_capacity(h.grid().len());
    for e in &mesh.boundary {
        if e.source_edge == node_of_angle.len() {
            node_of_angle.push(e.a);
        }
    }
    if node_of_angle.len() != h.grid().len() {
        return Err(Error::MeshFailure(
            "boundary chain lost polygon vertices".into(),
        ));
    }
    mesh.grid_binding = Some(GridBinding {
        grid: h.grid(),
        node_of_angle,
    });
    Ok(mesh)
}

/// Mesh a polygonal body directly (no angle-grid binding).
pub fn mesh_polygon(p: &ConvexPolygon, target_h: f64) -> Result<TriangleMesh> {
    let diameter = polygon_diameter(p);
    if !(target_h > 0.0) || target_h > diameter / 8.0 {
        return Err(Error::MeshFailure(format!(
            "target size {target_h} exceeds diameter/8 = {}",
            diameter / 8.0
        )));
    }
    mesh_convex_polygon(p, target_h)
}

fn polygon_diameter(p: &ConvexPolygon) -> f64 {
    let v = p.vertices();
    let mut best = 0.0f64;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = ((v[i][0] - v[j][0]).powi(2) + (v[i][1] - v[j][1]).powi(2)).sqrt();
            best = best.max(d);
        }
    }
    best
}

fn mesh_convex_polygon(poly: &ConvexPolygon, target: f64) -> Result<TriangleMesh> {
    // Boundary chain. Refinement nodes are nudged outward by a hair so that
    // no three chain points are exactly collinear, which keeps every chain
    // node on the Delaunay hull.
    let nudge = 1e-9 * target;
    let nv = poly.len();
    let mut nodes: Vec<[f64; 2]> = Vec::new();
    let mut chain_tag: Vec<usize> = Vec::new();
    for k in 0..nv {
        let a = poly.vertices()[k];
        let b = poly.vertices()[(k + 1) % nv];
        let edge = poly.edge(k);
        let m = (edge.len / target).ceil().max(1.0) as usize;
        for j in 0..m {
            let t = j as f64 / m as f64;
            let mut pt = [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
            if j > 0 {
                pt[0] += nudge * edge.normal[0];
                pt[1] += nudge * edge.normal[1];
            }
            nodes.push(pt);
            chain_tag.push(k);
        }
    }
    let n_boundary = nodes.len();

    // Hexagonal interior lattice, centered at the origin so centrally
    // symmetric bodies get centrally symmetric point sets.
    let spacing = target;
    let row_h = spacing * 3.0f64.sqrt() / 2.0;
    let (mut max_x, mut max_y) = (0.0f64, 0.0f64);
    for v in poly.vertices() {
        max_x = max_x.max(v[0].abs());
        max_y = max_y.max(v[1].abs());
    }
    let clearance = 0.55 * spacing;
    let edges: Vec<_> = (0..nv).map(|k| poly.edge(k)).collect();
    let r_in = edges
        .iter()
        .map(|e| e.support)
        .fold(f64::INFINITY, f64::min);
    let jmax = (max_y / row_h).ceil() as i64;
    let kmax = (max_x / spacing).ceil() as i64 + 1;
    for j in -jmax..=jmax {
        let y = j as f64 * row_h;
        let off = if j.rem_euclid(2) == 1 { 0.5 * spacing } else { 0.0 };
        for k in -kmax..=kmax {
            let x = k as f64 * spacing + off;
            let rr = (x * x + y * y).sqrt();
            if rr <= r_in - clearance
                || edges
                    .iter()
                    .all(|e| e.support - (x * e.normal[0] + y * e.normal[1]) >= clearance)
            {
                nodes.push([x, y]);
            }
        }
    }

    // Delaunay + smoothing sweeps. Interior nodes move to the average of
    // their neighbors; the triangulation is rebuilt after each sweep.
    let mut triangles = delaunay(&nodes)?;
    for round in 0..4 {
        let sweeps = if round == 0 { 4 } else { 4 };
        for _ in 0..sweeps {
            smooth_interior(&mut nodes, &triangles, n_boundary);
            triangles = delaunay(&nodes)?;
        }
        let worst = triangles
            .iter()
            .map(|t| min_angle_of(&nodes, t))
            .fold(f64::INFINITY, f64::min)
            .to_degrees();
        if worst >= MIN_ANGLE_DEG {
            break;
        }
        if round == 3 {
            return Err(Error::MeshFailure(format!(
                "minimum angle {worst:.2} deg below {MIN_ANGLE_DEG} after smoothing"
            )));
        }
    }

    // Hull must be exactly the boundary chain.
    let tri = triangulate(&to_points(&nodes));
    let mut hull = tri.hull.clone();
    if hull.len() != n_boundary {
        return Err(Error::MeshFailure(format!(
            "hull has {} nodes, boundary chain has {n_boundary}",
            hull.len()
        )));
    }
    if !hull_is_ccw(&nodes, &hull) {
        hull.reverse();
    }
    let pos0 = hull
        .iter()
        .position(|&v| v == 0)
        .ok_or_else(|| Error::MeshFailure("chain node 0 missing from hull".into()))?;
    for i in 0..n_boundary {
        if hull[(pos0 + i) % n_boundary] != i {
            return Err(Error::MeshFailure(
                "hull does not follow the boundary chain".into(),
            ));
        }
    }

    let boundary: Vec<BoundaryEdge> = (0..n_boundary)
        .map(|i| {
            let a = i;
            let b = (i + 1) % n_boundary;
            let k = chain_tag[i];
            let e = &edges[k];
            let d = [nodes[b][0] - nodes[a][0], nodes[b][1] - nodes[a][1]];
            BoundaryEdge {
                a,
                b,
                source_edge: k,
                normal: e.normal,
                support: e.support,
                len: (d[0] * d[0] + d[1] * d[1]).sqrt(),
            }
        })
        .collect();

    let mesh = TriangleMesh {
        nodes,
        triangles,
        boundary,
        n_boundary,
        grid_binding: None,
    };
    for t in &mesh.triangles {
        if mesh.triangle_area(t) <= 0.0 {
            return Err(Error::MeshFailure("non-positive triangle".into()));
        }
    }
    Ok(mesh)
}

fn to_points(nodes: &[[f64; 2]]) -> Vec<Point> {
    nodes.iter().map(|n| Point { x: n[0], y: n[1] }).collect()
}

/// Delaunay triangulation with triangles normalized to counterclockwise.
fn delaunay(nodes: &[[f64; 2]]) -> Result<Vec<[usize; 3]>> {
    let tri = triangulate(&to_points(nodes));
    if tri.triangles.is_empty() {
        return Err(Error::MeshFailure("empty triangulation".into()));
    }
    let mut out = Vec::with_capacity(tri.triangles.len() / 3);
    for t in tri.triangles.chunks_exact(3) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let ab = [nodes[b][0] - nodes[a][0], nodes[b][1] - nodes[a][1]];
        let ac = [nodes[c][0] - nodes[a][0], nodes[c][1] - nodes[a][1]];
        if ab[0] * ac[1] - ab[1] * ac[0] >= 0.0 {
            out.push([a, b, c]);
        } else {
            out.push([a, c, b]);
        }
    }
    Ok(out)
}

fn hull_is_ccw(nodes: &[[f64; 2]], hull: &[usize]) -> bool {
    let mut acc = 0.0;
    for i in 0..hull.len() {
        let a = nodes[hull[i]];
        let b = nodes[hull[(i + 1) % hull.len()]];
        acc += a[0] * b[1] - a[1] * b[0];
    }
    acc > 0.0
}

fn smooth_interior(nodes: &mut [[f64; 2]], triangles: &[[usize; 3]], n_boundary: usize) {
    let n = nodes.len();
    let mut acc = vec![[0.0f64; 2]; n];
    let mut cnt = vec![0u32; n];
    for t in triangles {
        for k in 0..3 {
            let u = t[k];
            let v = t[(k + 1) % 3];
            acc[u][0] += nodes[v][0];
            acc[u][1] += nodes[v][1];
            cnt[u] += 1;
            acc[v][0] += nodes[u][0];
            acc[v][1] += nodes[u][1];
            cnt[v] += 1;
        }
    }
    for i in n_boundary..n {
        if cnt[i] > 0 {
            nodes[i] = [acc[i][0] / cnt[i] as f64, acc[i][1] / cnt[i] as f64];
        }
    }
}
