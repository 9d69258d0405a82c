//! Eigenvalues of dense real symmetric matrices.
//!
//! Householder reduction to tridiagonal form followed by the implicit QL
//! iteration with Wilkinson shifts. Only eigenvalues are produced, so the
//! reflectors are discarded as soon as they have been applied.

/// Symmetric matrix stored row-major; only the lower triangle is read.
#[derive(Debug, Clone)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// # Panics
    ///
    /// Panics if `data.len() != n * n`.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), n * n, "expected an {n}x{n} matrix");
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// All eigenvalues, sorted descending.
    pub fn eigenvalues(self) -> Vec<f64> {
        let (diag, off) = self.tridiagonalize();
        let mut values = tridiagonal_eigenvalues(diag, off);
        values.sort_by(|a, b| b.total_cmp(a));
        values
    }

    /// Reduces to tridiagonal form, returning the diagonal and the
    /// sub-diagonal (`off[i]` couples `i - 1` and `i`; `off[0]` is zero).
    ///
    /// Works upwards from the last row so that each Householder vector is a
    /// contiguous row prefix.
    fn tridiagonalize(mut self) -> (Vec<f64>, Vec<f64>) {
        let n = self.n;
        let mut diag = vec![0.0; n];
        let mut off = vec![0.0; n];
        let mut u = vec![0.0; n];
        let mut p = vec![0.0; n];

        for i in (1..n).rev() {
            let l = i - 1;
            diag[i] = self.data[i * n + i];
            if l == 0 {
                off[i] = self.data[i * n];
                continue;
            }
            let row = &self.data[i * n..i * n + i];
            let scale: f64 = row.iter().map(|x| x.abs()).sum();
            if scale == 0.0 {
                off[i] = 0.0;
                continue;
            }
            let u = &mut u[..i];
            for (uk, &a) in u.iter_mut().zip(row) {
                *uk = a / scale;
            }
            let mut h: f64 = u.iter().map(|x| x * x).sum();
            let f = u[l];
            let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
            off[i] = scale * g;
            h -= f * g;
            u[l] = f - g;

            // p = A u / h over the leading i x i block, lower triangle only
            let p = &mut p[..i];
            p.fill(0.0);
            for j in 0..i {
                let aj = &self.data[j * n..j * n + j];
                let uj = u[j];
                let mut acc = self.data[j * n + j] * uj;
                for ((pk, &a), &uk) in p[..j].iter_mut().zip(aj).zip(&u[..j]) {
                    acc += a * uk;
                    *pk += a * uj;
                }
                p[j] += acc;
            }
            let inv_h = 1.0 / h;
            let mut k_coef = 0.0;
            for (pk, &uk) in p.iter_mut().zip(u.iter()) {
                *pk *= inv_h;
                k_coef += uk * *pk;
            }
            k_coef *= 0.5 * inv_h;
            // q = p - K u, stored in p
            for (pk, &uk) in p.iter_mut().zip(u.iter()) {
                *pk -= k_coef * uk;
            }
            // A <- A - u q^T - q u^T on the lower triangle
            for j in 0..i {
                let (uj, qj) = (u[j], p[j]);
                let aj = &mut self.data[j * n..=j * n + j];
                for ((a, &uk), &qk) in aj.iter_mut().zip(&u[..=j]).zip(&p[..=j]) {
                    *a -= uj * qk + qj * uk;
                }
            }
        }
        if n > 0 {
            diag[0] = self.data[0];
        }
        (diag, off)
    }
}

/// Implicit QL on a symmetric tridiagonal matrix. `off[i]` couples `i - 1`
/// and `i`.
pub fn tridiagonal_eigenvalues(mut d: Vec<f64>, off: Vec<f64>) -> Vec<f64> {
    let n = d.len();
    if n <= 1 {
        return d;
    }
    // e[i] couples i and i + 1
    let mut e: Vec<f64> = off[1..].to_vec();
    e.push(0.0);

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            assert!(iterations <= 60, "QL iteration failed to converge");

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn eig(n: usize, data: Vec<f64>) -> Vec<f64> {
        SymmetricMatrix::from_row_major(n, data).eigenvalues()
    }

    #[test]
    fn trivial_sizes() {
        assert!(eig(0, vec![]).is_empty());
        assert_eq!(eig(1, vec![2.5]), vec![2.5]);
        let v = eig(2, vec![0.0, 1.0, 1.0, 0.0]);
        assert_abs_diff_eq!(v[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v[1], -1.0, epsilon = 1e-15);
    }

    #[test]
    fn diagonal_matrix_is_sorted() {
        let v = eig(3, vec![1.0, 0.0, 0.0, 0.0, -4.0, 0.0, 0.0, 0.0, 3.0]);
        assert_eq!(v, vec![3.0, 1.0, -4.0]);
    }

    #[test]
    fn path_graph_matches_cosines() {
        // P_n has eigenvalues 2 cos(k pi / (n + 1))
        let n = 17;
        let mut a = vec![0.0; n * n];
        for i in 0..n - 1 {
            a[i * n + i + 1] = 1.0;
            a[(i + 1) * n + i] = 1.0;
        }
        let got = eig(n, a);
        for (k, v) in got.iter().enumerate() {
            let want = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert_abs_diff_eq!(*v, want, epsilon = 1e-13);
        }
    }

    #[test]
    fn dense_matrix_trace_and_frobenius() {
        // deterministic pseudo-random symmetric matrix
        let n = 40;
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let x = next();
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let frob: f64 = a.iter().map(|x| x * x).sum();
        let v = eig(n, a);
        assert_abs_diff_eq!(v.iter().sum::<f64>(), trace, epsilon = 1e-12);
        assert_abs_diff_eq!(v.iter().map(|x| x * x).sum::<f64>(), frob, epsilon = 1e-11);
    }

    #[test]
    fn zero_rows_are_handled() {
        // block diagonal with an isolated vertex between two edges
        let mut a = vec![0.0; 25];
        for (i, j) in [(0, 1), (3, 4)] {
            a[i * 5 + j] = 1.0;
            a[j * 5 + i] = 1.0;
        }
        let v = eig(5, a);
        let want = [1.0, 1.0, 0.0, -1.0, -1.0];
        for (g, w) in v.iter().zip(want) {
            assert_abs_diff_eq!(*g, w, epsilon = 1e-14);
        }
    }
}
