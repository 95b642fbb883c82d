//! Explicit F_q generator matrices from descriptors, plus the independent
//! brute-force linear-algebra oracle (null space, row-space comparison and
//! intersection, exhaustive minimum distance, left-ideal closure).

use crate::code::{CodeDescriptor, OuterSpec};
use crate::error::{Error, Result};
use crate::factor::FactorProfile;
use crate::field::{Fq, FqElem, Poly};
use crate::idempotent::idempotent_table;

/// Dense row-major matrix over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFq {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FqElem>,
}

impl MatrixFq {
    pub fn zero(rows: usize, cols: usize) -> MatrixFq {
        MatrixFq {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> MatrixFq {
        let mut m = MatrixFq::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<FqElem>>) -> Result<MatrixFq> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(MatrixFq {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn get(&self, r: usize, c: usize) -> FqElem {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[FqElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &MatrixFq) -> Result<MatrixFq> {
        if self.cols != other.cols {
            return Err(Error::InvalidInput("column count mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixFq {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> MatrixFq {
        let mut out = MatrixFq::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }
}

pub fn mat_mul(field: &Fq, a: &MatrixFq, b: &MatrixFq) -> Result<MatrixFq> {
    if a.cols != b.rows {
        return Err(Error::InvalidInput("dimension mismatch in product".into()));
    }
    let mut out = MatrixFq::zero(a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let av = a.get(r, k);
            if av == 0 {
                continue;
            }
            for c in 0..b.cols {
                let t = field.mul(av, b.get(k, c));
                out.data[r * b.cols + c] = field.add(out.data[r * b.cols + c], t);
            }
        }
    }
    Ok(out)
}

/// G * G^T, the Gram matrix of the rows under the Euclidean inner product.
pub fn gram(field: &Fq, g: &MatrixFq) -> MatrixFq {
    mat_mul(field, g, &g.transpose()).expect("square product")
}

/// Reduced row echelon form with zero rows removed; row count = rank.
pub fn rref(field: &Fq, m: &MatrixFq) -> MatrixFq {
    let mut data: Vec<Vec<FqElem>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivot_row = 0;
    for col in 0..m.cols {
        let Some(sel) = (pivot_row..data.len()).find(|&r| data[r][col] != 0) else {
            continue;
        };
        data.swap(pivot_row, sel);
        let inv = field.inv(data[pivot_row][col]).expect("nonzero pivot");
        for c in col..m.cols {
            data[pivot_row][c] = field.mul(data[pivot_row][c], inv);
        }
        for r in 0..data.len() {
            if r != pivot_row && data[r][col] != 0 {
                let factor = data[r][col];
                for c in col..m.cols {
                    let t = field.mul(factor, data[pivot_row][c]);
                    data[r][c] = field.sub(data[r][c], t);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == data.len() {
            break;
        }
    }
    data.truncate(pivot_row);
    MatrixFq::from_rows(m.cols, data).expect("rectangular")
}

pub fn rank(field: &Fq, m: &MatrixFq) -> usize {
    rref(field, m).rows
}

/// Basis of {v : M v^T = 0}, one row per free column of rref(M).
pub fn null_space(field: &Fq, m: &MatrixFq) -> MatrixFq {
    let r = rref(field, m);
    let mut pivot_of_col = vec![None; m.cols];
    let mut lead = 0;
    for row in 0..r.rows {
        while r.get(row, lead) == 0 {
            lead += 1;
        }
        pivot_of_col[lead] = Some(row);
    }
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0; m.cols];
        v[free] = 1;
        for col in 0..free {
            if let Some(prow) = pivot_of_col[col] {
                v[col] = field.neg(r.get(prow, free));
            }
        }
        basis.push(v);
    }
    MatrixFq::from_rows(m.cols, basis).expect("rectangular")
}

/// Generator of the Euclidean dual code of the row space.
pub fn brute_dual(field: &Fq, g: &MatrixFq) -> MatrixFq {
    null_space(field, g)
}

/// Row spaces compared by canonical form.
pub fn row_space_equal(field: &Fq, a: &MatrixFq, b: &MatrixFq) -> Result<bool> {
    if a.cols != b.cols {
        return Err(Error::InvalidInput("column count mismatch".into()));
    }
    Ok(rref(field, a) == rref(field, b))
}

/// Basis of RS(a) ∩ RS(b) via (RS(a)^⊥ + RS(b)^⊥)^⊥.
pub fn row_space_intersection(field: &Fq, a: &MatrixFq, b: &MatrixFq) -> Result<MatrixFq> {
    if a.cols != b.cols {
        return Err(Error::InvalidInput("column count mismatch".into()));
    }
    let stacked = null_space(field, a).stack(&null_space(field, b))?;
    Ok(null_space(field, &stacked))
}

/// k x n block whose row j holds the coefficients of x^j * a(x) mod x^n - 1.
pub fn circulant_block(field: &Fq, a: &Poly, k: usize, n: usize) -> Result<MatrixFq> {
    if k == 0 || k > n {
        return Err(Error::InvalidInput(format!(
            "circulant height {k} out of range 1..={n}"
        )));
    }
    if a.degree().map_or(false, |d| d >= n) {
        return Err(Error::InvalidInput("polynomial not reduced mod x^n - 1".into()));
    }
    let _ = field;
    let mut row: Vec<FqElem> = (0..n).map(|c| a.coeff(c)).collect();
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        rows.push(row.clone());
        row.rotate_right(1);
    }
    MatrixFq::from_rows(n, rows)
}

/// Generator matrix of a descriptor: per-index vertical stack of
/// Line -> ([eps_i g1]_{d_i} | [eps_i g2]_{d_i}) and
/// Full -> [eps_i]_{d_i} ⊕ [eps_i]_{d_i} blocks.
///
/// Zero specs contribute no rows, so row count = dim; with `verbatim` each
/// Zero spec contributes the literal all-zero row instead.
pub fn generator_matrix(
    profile: &FactorProfile,
    desc: &CodeDescriptor,
    verbatim: bool,
) -> Result<MatrixFq> {
    let eps = idempotent_table(profile)?;
    generator_matrix_with(profile, &eps, desc, verbatim)
}

/// Same as [`generator_matrix`], reusing a precomputed idempotent table.
pub fn generator_matrix_with(
    profile: &FactorProfile,
    eps: &[Poly],
    desc: &CodeDescriptor,
    verbatim: bool,
) -> Result<MatrixFq> {
    let field = &profile.field;
    let n = profile.n;
    if desc.specs.len() != profile.num_factors() || eps.len() != profile.num_factors() {
        return Err(Error::InvalidInput("descriptor/profile shape mismatch".into()));
    }
    let mut rows: Vec<Vec<FqElem>> = Vec::new();
    let push_pair = |rows: &mut Vec<Vec<FqElem>>, left: &MatrixFq, right: &MatrixFq| {
        for r in 0..left.rows {
            let mut v = left.row(r).to_vec();
            v.extend_from_slice(right.row(r));
            rows.push(v);
        }
    };
    for (i, spec) in desc.specs.iter().enumerate() {
        let d = profile.degrees[i];
        match spec {
            OuterSpec::Zero => {
                if verbatim {
                    rows.push(vec![0; 2 * n]);
                }
            }
            OuterSpec::Line(g1, g2) => {
                let left = embed_block(profile, &eps[i], g1, d)?;
                let right = embed_block(profile, &eps[i], g2, d)?;
                push_pair(&mut rows, &left, &right);
            }
            OuterSpec::Full => {
                let block = circulant_block(field, &eps[i], d, n)?;
                let zero = MatrixFq::zero(d, n);
                push_pair(&mut rows, &block, &zero);
                push_pair(&mut rows, &zero, &block);
            }
        }
    }
    MatrixFq::from_rows(2 * n, rows)
}

fn embed_block(profile: &FactorProfile, eps: &Poly, g: &Poly, d: usize) -> Result<MatrixFq> {
    let field = &profile.field;
    let prod = field.poly_rem(
        &field.poly_mul(eps, g),
        &field.x_pow_n_minus_1(profile.n),
    )?;
    circulant_block(field, &prod, d, profile.n)
}

/// Minimum Hamming weight over all nonzero codewords of the row space.
/// Ok(None) for the zero code; refuses when q^rank exceeds the budget.
pub fn min_distance(field: &Fq, g: &MatrixFq, budget: u128) -> Result<Option<usize>> {
    let basis = rref(field, g);
    let r = basis.rows;
    if r == 0 {
        return Ok(None);
    }
    let q = field.q() as u128;
    let needed = q
        .checked_pow(r as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    // odometer over scalar digits; each digit bump adds one basis row, and a
    // rollover adds it a q-th time, cancelling it out again
    let mut digits = vec![0u64; r];
    let mut word = vec![0u64; basis.cols];
    let mut best = usize::MAX;
    'outer: loop {
        let mut i = 0;
        loop {
            for (w, &b) in word.iter_mut().zip(basis.row(i)) {
                *w = field.add(*w, b);
            }
            digits[i] += 1;
            if digits[i] < field.q() {
                break;
            }
            digits[i] = 0;
            i += 1;
            if i == r {
                break 'outer;
            }
        }
        let weight = word.iter().filter(|&&e| e != 0).count();
        if weight < best {
            best = weight;
        }
    }
    Ok(Some(best))
}

fn in_row_space(field: &Fq, basis: &MatrixFq, v: &[FqElem]) -> bool {
    let mut v = v.to_vec();
    for r in 0..basis.rows {
        let lead = basis
            .row(r)
            .iter()
            .position(|&e| e != 0)
            .expect("no zero rows in rref");
        if v[lead] != 0 {
            let factor = v[lead];
            for c in 0..basis.cols {
                let t = field.mul(factor, basis.get(r, c));
                v[c] = field.sub(v[c], t);
            }
        }
    }
    v.iter().all(|&e| e == 0)
}

/// True iff the row space of a 2n-column matrix is closed under the
/// simultaneous cyclic shift (a, b) -> (x a, x b) and under the swap with
/// inverse substitution (a, b) -> (b(x^{-1}), a(x^{-1})).
pub fn check_left_ideal(field: &Fq, g: &MatrixFq, n: usize) -> Result<bool> {
    if g.cols != 2 * n {
        return Err(Error::InvalidInput(format!(
            "expected 2n = {} columns, got {}",
            2 * n,
            g.cols
        )));
    }
    let basis = rref(field, g);
    for r in 0..basis.rows {
        let row = basis.row(r);
        let (a, b) = (&row[..n], &row[n..]);
        let mut shifted = vec![0; 2 * n];
        for l in 0..n {
            shifted[(l + 1) % n] = a[l];
            shifted[n + (l + 1) % n] = b[l];
        }
        if !in_row_space(field, &basis, &shifted) {
            return Ok(false);
        }
        let mut swapped = vec![0; 2 * n];
        for l in 0..n {
            let inv = if l == 0 { 0 } else { n - l };
            swapped[inv] = b[l];
            swapped[n + inv] = a[l];
        }
        if !in_row_space(field, &basis, &swapped) {
            return Ok(false);
        }
    }
    Ok(true)
}
