//! Smith normal form of dense integer matrices.

use crate::integer::Int;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Int::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Int::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = Int::from(v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Int::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = Int::ZERO;
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += &(a * b);
                    }
                }
                s
            })
            .collect()
    }

    /// Rows `range` of the matrix.
    pub fn row_block(&self, start: usize, end: usize) -> Matrix {
        Matrix {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Columns `start..end` of the matrix.
    pub fn col_block(&self, start: usize, end: usize) -> Matrix {
        let mut out = Matrix::zeros(self.rows, end - start);
        for i in 0..self.rows {
            for j in start..end {
                out.data[i * out.cols + j - start] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Determinant by fraction-free elimination (Bareiss).
    pub fn determinant(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::ONE;
        }
        let mut a = self.clone();
        let mut sign = 1i64;
        let mut prev = Int::ONE;
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Int::ZERO,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(a.get(i, j) * a.get(k, k)) - &(a.get(i, k) * a.get(k, j));
                    a.set(i, j, v.div_rem_euclid(&prev).0);
                }
            }
            prev = a.get(k, k).clone();
        }
        a.get(n - 1, n - 1).mul_small(sign)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &Int) {
        for col in 0..self.cols {
            let b = &self.data[j * self.cols + col];
            if !b.is_zero() {
                let v = &self.data[i * self.cols + col] + &(b * c);
                self.data[i * self.cols + col] = v;
            }
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &Int) {
        for r in 0..self.rows {
            let b = &self.data[r * self.cols + j];
            if !b.is_zero() {
                let v = &self.data[r * self.cols + i] + &(b * c);
                self.data[r * self.cols + i] = v;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -&self.data[i * self.cols + c];
            self.data[i * self.cols + c] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }
}

/// `P · A · Q = S` with `S` diagonal, `P`, `Q` unimodular.
#[derive(Clone, Debug)]
pub struct Snf {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diagonal: Vec<Int>,
    pub p: Matrix,
    pub p_inv: Matrix,
    pub q: Matrix,
    pub q_inv: Matrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// `L` with `A = L · S · R`.
    pub fn left(&self) -> &Matrix {
        &self.p_inv
    }

    /// `R` with `A = L · S · R`.
    pub fn right(&self) -> &Matrix {
        &self.q_inv
    }

    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> Matrix {
        let mut s = Matrix::zeros(rows, cols);
        for (i, d) in self.diagonal.iter().enumerate() {
            s.set(i, i, d.clone());
        }
        s
    }
}

struct Work {
    a: Matrix,
    p: Matrix,
    p_inv: Matrix,
    q: Matrix,
    q_inv: Matrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.p.swap_rows(i, j);
        self.p_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.q.swap_cols(i, j);
        self.q_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, i: usize, j: usize, c: &Int) {
        self.a.add_row(i, j, c);
        self.p.add_row(i, j, c);
        self.p_inv.add_col(j, i, &-c);
    }

    fn add_col(&mut self, i: usize, j: usize, c: &Int) {
        self.a.add_col(i, j, c);
        self.q.add_col(i, j, c);
        self.q_inv.add_row(j, i, &-c);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.p.negate_row(i);
        self.p_inv.negate_col(i);
    }
}

/// Smith normal form with transforms.
/// Column reduction `B · Q = [H | 0]` with `H` of full column rank. Returns
/// the rank, `Q` and `Q⁻¹`; the trailing columns of `Q` span the kernel.
/// Only `cols × cols` transforms are formed, so tall matrices are cheap.
pub fn column_reduce(b: &Matrix) -> (usize, Matrix, Matrix) {
    let (r, c) = (b.rows(), b.cols());
    let mut w: Vec<Vec<Int>> = (0..c).map(|j| b.column(j)).collect();
    let mut q: Vec<Vec<Int>> = (0..c).map(|j| unit(c, j)).collect();
    let mut qi: Vec<Vec<Int>> = (0..c).map(|i| unit(c, i)).collect();
    let mut piv = 0;
    for row in 0..r {
        if piv == c {
            break;
        }
        loop {
            let best = (piv..c)
                .filter(|&j| !w[j][row].is_zero())
                .min_by(|&x, &y| w[x][row].abs().cmp(&w[y][row].abs()));
            let Some(j0) = best else { break };
            w.swap(piv, j0);
            q.swap(piv, j0);
            qi.swap(piv, j0);
            let mut done = true;
            for j in piv + 1..c {
                if w[j][row].is_zero() {
                    continue;
                }
                let (f, rem) = w[j][row].div_rem_euclid(&w[piv][row]);
                let (src, dst) = two(&mut w, piv, j);
                axpy(dst, &f, src);
                let (src, dst) = two(&mut q, piv, j);
                axpy(dst, &f, src);
                let (dst, src) = two(&mut qi, piv, j);
                axpy(dst, &-&f, src);
                if !rem.is_zero() {
                    done = false;
                }
            }
            if done {
                piv += 1;
                break;
            }
        }
    }
    let mut qm = Matrix::zeros(c, c);
    let mut qim = Matrix::zeros(c, c);
    for i in 0..c {
        for j in 0..c {
            qm.set(i, j, q[j][i].clone());
            qim.set(i, j, qi[i][j].clone());
        }
    }
    (piv, qm, qim)
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::ZERO; n];
    v[i] = Int::ONE;
    v
}

/// Disjoint borrows of entries `i < j`.
fn two<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &mut T) {
    let (a, b) = v.split_at_mut(j);
    (&mut a[i], &mut b[0])
}

/// `dst -= f · src`.
fn axpy(dst: &mut [Int], f: &Int, src: &[Int]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= &(f * s);
        }
    }
}

/// An integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &Matrix, b: &[Int]) -> Option<Vec<Int>> {
    let snf = smith_normal_form(a);
    let pb = snf.p.mul_vec(b);
    let mut y = vec![Int::ZERO; a.cols()];
    for (i, v) in pb.iter().enumerate() {
        match snf.diagonal.get(i) {
            Some(d) => {
                let (q, r) = v.div_rem_euclid(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            None if !v.is_zero() => return None,
            None => {}
        }
    }
    Some(snf.q.mul_vec(&y))
}

pub fn smith_normal_form(a: &Matrix) -> Snf {
    let (m, n) = (a.rows, a.cols);
    let mut w = Work {
        a: a.clone(),
        p: Matrix::identity(m),
        p_inv: Matrix::identity(m),
        q: Matrix::identity(n),
        q_inv: Matrix::identity(n),
    };
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let v = w.a.get(i, j);
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < w.a.get(bi, bj).abs()) {
                    best = Some((i, j));
                    if v.is_unit() {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| w.a.get(bi, bj).is_unit()) {
                break;
            }
        }
        let Some((bi, bj)) = best else { break };
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        loop {
            let mut changed = false;
            for i in t + 1..m {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = w.a.get(i, t).div_rem_euclid(w.a.get(t, t)).0;
                w.add_row(i, t, &-q);
                if !w.a.get(i, t).is_zero() {
                    w.swap_rows(t, i);
                    changed = true;
                }
            }
            for j in t + 1..n {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = w.a.get(t, j).div_rem_euclid(w.a.get(t, t)).0;
                w.add_col(j, t, &-q);
                if !w.a.get(t, j).is_zero() {
                    w.swap_cols(t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // pivot must divide the whole trailing block
            let piv = w.a.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.a.get(i, j).divisible_by(&piv)));
            match bad {
                Some(i) => w.add_row(t, i, &Int::ONE),
                None => break,
            }
        }
        if w.a.get(t, t).signum() < 0 {
            w.negate_row(t);
        }
        t += 1;
    }
    let diagonal = (0..t).map(|i| w.a.get(i, i).clone()).collect();
    Snf {
        diagonal,
        p: w.p,
        p_inv: w.p_inv,
        q: w.q,
        q_inv: w.q_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &Matrix) -> Snf {
        let s = smith_normal_form(a);
        let d = s.diagonal_matrix(a.rows(), a.cols());
        assert_eq!(s.p.mul(a).mul(&s.q), d);
        assert_eq!(s.left().mul(&d).mul(s.right()), *a);
        assert_eq!(s.p.mul(&s.p_inv), Matrix::identity(a.rows()));
        assert_eq!(s.q.mul(&s.q_inv), Matrix::identity(a.cols()));
        assert!(s.p.determinant().is_unit());
        assert!(s.q.determinant().is_unit());
        for w in s.diagonal.windows(2) {
            assert!(w[1].divisible_by(&w[0]));
        }
        assert!(s.diagonal.iter().all(|d| d.signum() > 0));
        s
    }

    #[test]
    fn column_reduction_kernel() {
        let b = Matrix::from_rows(&[vec![2, 4, 6], vec![1, 1, 1], vec![3, 5, 7], vec![0, 0, 0]]);
        let (rank, q, qi) = column_reduce(&b);
        assert_eq!(rank, 2);
        assert_eq!(q.mul(&qi), Matrix::identity(3));
        let bq = b.mul(&q);
        assert!(bq.col_block(rank, 3).is_zero());
        assert!(q.determinant().is_unit());
    }

    #[test]
    fn integer_solve() {
        let a = Matrix::from_rows(&[vec![2, 4], vec![0, 3]]);
        let b = [Int::from(2), Int::from(3)];
        let x = solve_integer(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
        assert!(solve_integer(&Matrix::from_rows(&[vec![2]]), &[Int::ONE]).is_none());
        assert!(solve_integer(&Matrix::from_rows(&[vec![1], vec![1]]), &[Int::ONE, Int::ZERO]).is_none());
    }

    #[test]
    fn classic_examples() {
        let a = Matrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = check(&a);
        assert_eq!(s.diagonal, vec![Int::from(2), Int::from(6), Int::from(12)]);
        let b = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(check(&b).diagonal, vec![Int::ONE, Int::from(6)]);
        let z = Matrix::zeros(2, 3);
        assert_eq!(check(&z).rank(), 0);
        let e = Matrix::zeros(0, 4);
        assert_eq!(check(&e).rank(), 0);
    }

    #[test]
    fn determinant_matches_cofactor() {
        let a = Matrix::from_rows(&[vec![1, 2, 3], vec![0, 4, 5], vec![1, 0, 6]]);
        assert_eq!(a.determinant(), Int::from(22));
        let b = Matrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(b.determinant(), Int::from(-1));
    }
}
