//! Sparse symmetric kernels for the P1 solver: CSR products, reverse
//! Cuthill-McKee ordering, an envelope (skyline) Cholesky factorization, and
//! a cyclic tridiagonal solver for boundary mass systems.

use crate::error::{Error, Result};

/// Compressed sparse row matrix (square, general storage).
#[derive(Clone, Debug)]
pub struct Csr {
    pub n: usize,
    pub row_ptr: Vec<usize>,
    pub cols: Vec<usize>,
    pub vals: Vec<f64>,
}

impl Csr {
    /// Build from (row, col, value) triplets, summing duplicates.
    pub fn from_triplets(n: usize, mut triplets: Vec<(usize, usize, f64)>) -> Csr {
        triplets.sort_unstable_by_key(|&(i, j, _)| (i, j));
        let mut row_ptr = vec![0usize; n + 1];
        let mut cols: Vec<usize> = Vec::with_capacity(triplets.len());
        let mut vals: Vec<f64> = Vec::with_capacity(triplets.len());
        let mut cur_row = 0usize;
        for &(i, j, v) in &triplets {
            if i == cur_row && cols.len() > row_ptr[cur_row] && *cols.last().unwrap() == j {
                *vals.last_mut().unwrap() += v;
                continue;
            }
            while cur_row < i {
                cur_row += 1;
                row_ptr[cur_row] = cols.len();
            }
            cols.push(j);
            vals.push(v);
        }
        while cur_row < n {
            cur_row += 1;
            row_ptr[cur_row] = cols.len();
        }
        Csr {
            n,
            row_ptr,
            cols,
            vals,
        }
    }

    pub fn matvec(&self, x: &[f64], out: &mut [f64]) {
        for i in 0..self.n {
            let mut acc = 0.0;
            for k in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.vals[k] * x[self.cols[k]];
            }
            out[i] = acc;
        }
    }

    pub fn row(&self, i: usize) -> (&[usize], &[f64]) {
        let (lo, hi) = (self.row_ptr[i], self.row_ptr[i + 1]);
        (&self.cols[lo..hi], &self.vals[lo..hi])
    }
}

/// Quadratic form x . A y.
pub fn dot3(x: &[f64], a: &Csr, y: &[f64], scratch: &mut Vec<f64>) -> f64 {
    scratch.resize(a.n, 0.0);
    a.matvec(y, scratch);
    x.iter().zip(scratch.iter()).map(|(u, v)| u * v).sum()
}

/// Reverse Cuthill-McKee ordering of an undirected graph given as neighbor
/// lists. Returns `perm` with `perm[new] = old`. Deterministic: component
/// seeds are minimum-degree nodes, ties by index; neighbors are visited in
/// (degree, index) order.
pub fn reverse_cuthill_mckee(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    let degree = |i: usize| adj[i].len();
    loop {
        let seed = (0..n)
            .filter(|&i| !visited[i])
            .min_by_key(|&i| (degree(i), i));
        let Some(seed) = seed else { break };
        let mut queue = std::collections::VecDeque::new();
        visited[seed] = true;
        queue.push_back(seed);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut nbrs: Vec<usize> = adj[u].iter().cloned().filter(|&v| !visited[v]).collect();
            nbrs.sort_unstable_by_key(|&v| (degree(v), v));
            for v in nbrs {
                visited[v] = true;
                queue.push_back(v);
            }
        }
    }
    order.reverse();
    order
}

/// Symmetric positive definite matrix in envelope storage: row `i` holds the
/// contiguous columns `first[i]..=i` of the lower triangle.
pub struct Skyline {
    n: usize,
    first: Vec<usize>,
    start: Vec<usize>,
    data: Vec<f64>,
    factored: bool,
}

impl Skyline {
    /// Allocate the envelope implied by a symmetric sparsity pattern.
    pub fn from_pattern(n: usize, neighbors: impl Fn(usize) -> Vec<usize>) -> Skyline {
        let mut first = vec![0usize; n];
        for i in 0..n {
            let mut lo = i;
            for j in neighbors(i) {
                if j < lo {
                    lo = j;
                }
            }
            first[i] = lo;
        }
        let mut start = vec![0usize; n + 1];
        for i in 0..n {
            start[i + 1] = start[i] + (i - first[i] + 1);
        }
        let data = vec![0.0; start[n]];
        Skyline {
            n,
            first,
            start,
            data,
            factored: false,
        }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(j >= self.first[i] && j <= i);
        self.start[i] + (j - self.first[i])
    }

    /// Accumulate into entry (i, j) of the lower triangle (i >= j).
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let (i, j) = if i >= j { (i, j) } else { (j, i) };
        let k = self.idx(i, j);
        self.data[k] += v;
    }

    /// In-place Cholesky; fails on a non-positive pivot.
    pub fn factorize(&mut self) -> Result<()> {
        for i in 0..self.n {
            let fi = self.first[i];
            for j in fi..i {
                let fj = self.first[j];
                let lo = fi.max(fj);
                let mut sum = self.data[self.idx(i, j)];
                // dot of overlapping parts of rows i and j
                let oi = self.idx(i, lo);
                let oj = self.idx(j, lo);
                let len = j - lo;
                for k in 0..len {
                    sum -= self.data[oi + k] * self.data[oj + k];
                }
                let djj = self.data[self.idx(j, j)];
                self.data[self.idx(i, j)] = sum / djj;
            }
            let mut diag = self.data[self.idx(i, i)];
            let oi = self.idx(i, fi);
            for k in 0..(i - fi) {
                let l = self.data[oi + k];
                diag -= l * l;
            }
            if diag <= 0.0 || !diag.is_finite() {
                return Err(Error::SolverFailure(format!(
                    "non-positive pivot {diag:.3e} at row {i}"
                )));
            }
            self.data[self.idx(i, i)] = diag.sqrt();
        }
        self.factored = true;
        Ok(())
    }

    /// Solve `A x = b` after factorization.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        assert!(self.factored, "solve before factorize");
        let n = self.n;
        let mut x = b.to_vec();
        // forward: L y = b
        for i in 0..n {
            let fi = self.first[i];
            let oi = self.start[i];
            let mut acc = x[i];
            for (k, j) in (fi..i).enumerate() {
                acc -= self.data[oi + k] * x[j];
            }
            x[i] = acc / self.data[self.idx(i, i)];
        }
        // backward: L^T x = y
        for i in (0..n).rev() {
            x[i] /= self.data[self.idx(i, i)];
            let fi = self.first[i];
            let oi = self.start[i];
            let xi = x[i];
            for (k, j) in (fi..i).enumerate() {
                x[j] -= self.data[oi + k] * xi;
            }
        }
        x
    }
}

/// Solve the symmetric cyclic tridiagonal system with diagonal `diag` and
/// couplings `off[i]` linking `i` and `i+1 (mod n)`, via Sherman-Morrison on
/// top of the Thomas algorithm.
pub fn solve_cyclic_tridiagonal(diag: &[f64], off: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    assert!(n >= 3 && off.len() == n && rhs.len() == n);
    let corner = off[n - 1];
    let gamma = -diag[0];
    let mut d = diag.to_vec();
    d[0] -= gamma;
    d[n - 1] -= corner * corner / gamma;

    let thomas = |d: &[f64], rhs: &[f64]| -> Result<Vec<f64>> {
        let mut c = vec![0.0; n];
        let mut x = vec![0.0; n];
        let mut beta = d[0];
        if beta == 0.0 {
            return Err(Error::SolverFailure("zero pivot in boundary mass".into()));
        }
        x[0] = rhs[0] / beta;
        for i in 1..n {
            c[i] = off[i - 1] / beta;
            beta = d[i] - off[i - 1] * c[i];
            if beta == 0.0 || !beta.is_finite() {
                return Err(Error::SolverFailure("singular boundary mass".into()));
            }
            x[i] = (rhs[i] - off[i - 1] * x[i - 1]) / beta;
        }
        for i in (0..n - 1).rev() {
            let next = x[i + 1];
            x[i] -= c[i + 1] * next;
        }
        Ok(x)
    };

    let y = thomas(&d, rhs)?;
    let mut u = vec![0.0; n];
    u[0] = gamma;
    u[n - 1] = corner;
    let z = thomas(&d, &u)?;
    // v = (1, 0, ..., corner/gamma)
    let vy = y[0] + corner / gamma * y[n - 1];
    let vz = z[0] + corner / gamma * z[n - 1];
    let factor = vy / (1.0 + vz);
    Ok((0..n).map(|i| y[i] - factor * z[i]).collect())
}
