//! Dense matrices over an exact ring.

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::{parse_element, Ring, RingElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl RingMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        RingMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![RingElement::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = RingElement::one(ring);
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Shape("ragged matrix rows".into()));
            }
            for e in row {
                if e.ring() != ring {
                    return Err(Error::Ring(crate::rings::RingError::DescriptorMismatch {
                        left: ring.to_string(),
                        right: e.ring().to_string(),
                    }));
                }
                entries.push(e);
            }
        }
        Ok(RingMatrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Builds a matrix from nested arrays of ring-element literals.
    pub fn from_literals<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_element(s.as_ref(), ring).map_err(Error::from))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, parsed)
    }

    pub fn to_literals(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RingElement) {
        debug_assert_eq!(value.ring(), &self.ring);
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    fn check_same(&self, other: &RingMatrix) -> Result<()> {
        crate::rings::same_ring(&self.ring, &other.ring)?;
        Ok(())
    }

    pub fn add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RingMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> RingMatrix {
        RingMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RingMatrix::zero(&self.ring, self.rows, other.cols);
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
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &RingElement) -> Result<RingMatrix> {
        crate::rings::same_ring(&self.ring, k.ring())?;
        Ok(RingMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * k).collect(),
        })
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = RingMatrix::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entrywise lift into a ring extending this one by further variables.
    pub fn lift(&self, target: &Ring) -> Result<RingMatrix> {
        Ok(RingMatrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| e.lift(target))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Square matrix with the given blocks on the diagonal; an empty list
    /// gives the 0x0 matrix.
    pub fn block_diag(ring: &Ring, blocks: &[RingMatrix]) -> Result<RingMatrix> {
        let mut n = 0;
        for b in blocks {
            crate::rings::same_ring(ring, &b.ring)?;
            if !b.is_square() {
                return Err(Error::Shape(format!(
                    "block_diag needs square blocks, got {}x{}",
                    b.rows, b.cols
                )));
            }
            n += b.rows;
        }
        let mut out = RingMatrix::zero(ring, n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.rows;
        }
        Ok(out)
    }

    /// Assembles a block matrix from a grid of equally sized blocks.
    pub fn from_blocks(ring: &Ring, grid: &[Vec<RingMatrix>]) -> Result<RingMatrix> {
        let br = grid.len();
        let bc = grid.first().map_or(0, |r| r.len());
        let (h, w) = grid
            .first()
            .and_then(|r| r.first())
            .map_or((0, 0), |b| (b.rows, b.cols));
        let mut out = RingMatrix::zero(ring, br * h, bc * w);
        for (bi, row) in grid.iter().enumerate() {
            if row.len() != bc {
                return Err(Error::Shape("ragged block grid".into()));
            }
            for (bj, b) in row.iter().enumerate() {
                crate::rings::same_ring(ring, &b.ring)?;
                if (b.rows, b.cols) != (h, w) {
                    return Err(Error::Shape("blocks of unequal size".into()));
                }
                for i in 0..h {
                    for j in 0..w {
                        out.set(bi * h + i, bj * w + j, b.get(i, j).clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block `(bi, bj)` of size `h x w` (0-based block indices).
    pub fn block(&self, bi: usize, bj: usize, h: usize, w: usize) -> RingMatrix {
        let rows: Vec<usize> = (bi * h..(bi + 1) * h).collect();
        let cols: Vec<usize> = (bj * w..(bj + 1) * w).collect();
        self.select(&rows, &cols)
    }

    /// Submatrix on the given 0-based rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RingMatrix {
        let mut out = RingMatrix::zero(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<RingElement> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(RingElement::one(&self.ring));
        }
        let nvars = self.ring.nvars();
        // clear negative exponents row by row; the total shift is divided back out
        let mut total_shift = vec![0i32; nvars];
        let mut m: Vec<Vec<RingElement>> = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<RingElement> = (0..n).map(|j| self.get(i, j).clone()).collect();
            let mut shift = vec![0i32; nvars];
            for e in &row {
                if let Some(mins) = e.min_exponents() {
                    for (s, v) in shift.iter_mut().zip(mins) {
                        *s = (*s).max(-v);
                    }
                }
            }
            for (t, s) in total_shift.iter_mut().zip(&shift) {
                *t += s;
            }
            m.push(row.iter().map(|e| e.shift(&shift)).collect());
        }
        let mut sign_negative = false;
        let mut prev = RingElement::one(&self.ring);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign_negative = !sign_negative;
                    }
                    None => return Ok(RingElement::zero(&self.ring)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .exact_divide(&prev)?
                        .ok_or_else(|| Error::InconsistentData("inexact Bareiss step".into()))?;
                }
                m[i][k] = RingElement::zero(&self.ring);
            }
            prev = m[k][k].clone();
        }
        let mut det = m[n - 1][n - 1].clone();
        if sign_negative {
            det = -det;
        }
        let back: Vec<i32> = total_shift.iter().map(|s| -s).collect();
        Ok(det.shift(&back))
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// kept as an independent check for small matrices.
    pub fn determinant_by_cofactors(&self) -> Result<RingElement> {
        self.require_square()?;
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.laplace(&idx, &idx))
    }

    fn laplace(&self, rows: &[usize], cols: &[usize]) -> RingElement {
        if rows.is_empty() {
            return RingElement::one(&self.ring);
        }
        let r = rows[0];
        let mut acc = RingElement::zero(&self.ring);
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(r, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e * &self.laplace(&rows[1..], &rest);
            acc = if k % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )))
        }
    }

    /// Inverse via the adjugate; fails unless the determinant is a unit.
    pub fn inverse(&self) -> Result<RingMatrix> {
        self.require_square()?;
        let n = self.rows;
        let det = self.determinant()?;
        if !det.is_unit() {
            return Err(Error::NotInvertible(format!(
                "determinant {det} is not a unit"
            )));
        }
        let inv_det = det.invert_unit()?;
        let mut out = RingMatrix::zero(&self.ring, n, n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.select(&rows, &cols).determinant()?;
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                out.set(i, j, &cof * &inv_det);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lits = self.to_literals();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| lits.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        for (i, row) in lits.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}", w = *w))
                .collect();
            write!(f, "[ {} ]", cells.join("  "))?;
            if i + 1 < lits.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
