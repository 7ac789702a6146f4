//! Exact arithmetic in the integral group ring `Z[D]` of the dihedral
//! group `D` of order `4n`, presented as
//!
//! ```text
//! D = < a, b | a^(2n) = b^2 = 1, aba = b >
//! ```
//!
//! Elements are dense coefficient vectors indexed by the group elements
//! `a^i b^j` through the fixed bijection `g(i, j) = i + 2n*j`, so every
//! serialized matrix and every canonical basis is reproducible across
//! implementations. All modules downstream are *right* modules; a ring
//! matrix represents a right-module homomorphism between free modules and
//! realizes as an integer block matrix via left multiplication.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::intlat::IntMatrix;

/// The fixed presentation data for one group order `4n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct DihedralContext {
    n: usize,
}

impl DihedralContext {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidGroupOrder);
        }
        Ok(DihedralContext { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `4n`, the group order and the rank of `Z[D]` over `Z`.
    pub fn group_order(&self) -> usize {
        4 * self.n
    }

    pub fn ring_dim(&self) -> usize {
        4 * self.n
    }

    /// `2n`, the order of the rotation `a`.
    pub fn rotation_order(&self) -> usize {
        2 * self.n
    }

    /// Index of `a^i b^j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.rotation_order() && j < 2);
        i + self.rotation_order() * j
    }

    /// Inverse of [`Self::index`].
    pub fn decompose(&self, g: usize) -> (usize, usize) {
        debug_assert!(g < self.group_order());
        (g % self.rotation_order(), g / self.rotation_order())
    }

    /// Product of two group elements by index:
    /// `(a^i1 b^j1)(a^i2 b^j2) = a^(i1 + (-1)^j1 i2) b^(j1 + j2)`.
    pub fn group_mul(&self, g1: usize, g2: usize) -> usize {
        assert!(
            g1 < self.group_order() && g2 < self.group_order(),
            "group element index out of range"
        );
        let m = self.rotation_order();
        let (i1, j1) = self.decompose(g1);
        let (i2, j2) = self.decompose(g2);
        let i = if j1 == 0 {
            (i1 + i2) % m
        } else {
            (i1 + m - i2) % m
        };
        self.index(i, j1 ^ j2)
    }

    pub fn group_inv(&self, g: usize) -> usize {
        let m = self.rotation_order();
        let (i, j) = self.decompose(g);
        if j == 0 {
            self.index((m - i) % m, 0)
        } else {
            g // reflections are involutions
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.group_order()
    }
}

// ---------------------------------------------------------------------------
// ring elements

/// An element of `Z[D]` as a dense length-`4n` coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    ctx: DihedralContext,
    coeffs: Vec<BigInt>,
}

impl RingElement {
    pub fn zero(ctx: DihedralContext) -> Self {
        RingElement {
            ctx,
            coeffs: vec![BigInt::zero(); ctx.ring_dim()],
        }
    }

    pub fn one(ctx: DihedralContext) -> Self {
        Self::group_element(ctx, 0)
    }

    pub fn group_element(ctx: DihedralContext, g: usize) -> Self {
        assert!(g < ctx.group_order(), "group element index out of range");
        let mut e = Self::zero(ctx);
        e.coeffs[g] = BigInt::one();
        e
    }

    /// `a^i b^j`.
    pub fn monomial(ctx: DihedralContext, i: usize, j: usize) -> Self {
        Self::group_element(ctx, ctx.index(i, j))
    }

    pub fn gen_a(ctx: DihedralContext) -> Self {
        Self::monomial(ctx, 1, 0)
    }

    pub fn gen_b(ctx: DihedralContext) -> Self {
        Self::monomial(ctx, 0, 1)
    }

    /// `Σ = 1 + a + ... + a^(2n-1)`.
    pub fn sigma(ctx: DihedralContext) -> Self {
        let mut e = Self::zero(ctx);
        for i in 0..ctx.rotation_order() {
            e.coeffs[ctx.index(i, 0)] = BigInt::one();
        }
        e
    }

    /// The full group sum `N = Σ_{g in D} g`, the left annihilator of the
    /// augmentation ideal.
    pub fn group_sum(ctx: DihedralContext) -> Self {
        RingElement {
            ctx,
            coeffs: vec![BigInt::one(); ctx.ring_dim()],
        }
    }

    pub fn from_coeffs(ctx: DihedralContext, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), ctx.ring_dim(), "coefficient vector length");
        RingElement { ctx, coeffs }
    }

    pub fn from_i64_coeffs(ctx: DihedralContext, coeffs: &[i64]) -> Self {
        Self::from_coeffs(ctx, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn context(&self) -> DihedralContext {
        self.ctx
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &BigInt {
        &self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn assert_same_ctx(&self, other: &Self) {
        assert!(self.ctx == other.ctx, "mixed dihedral contexts");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ctx(other);
        RingElement {
            ctx: self.ctx,
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_ctx(other);
        RingElement {
            ctx: self.ctx,
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        RingElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        RingElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Ring product, the bilinear extension of the group law.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ctx(other);
        let mut out = Self::zero(self.ctx);
        for g1 in self.ctx.elements() {
            if self.coeffs[g1].is_zero() {
                continue;
            }
            for g2 in self.ctx.elements() {
                if other.coeffs[g2].is_zero() {
                    continue;
                }
                let g = self.ctx.group_mul(g1, g2);
                out.coeffs[g] += &self.coeffs[g1] * &other.coeffs[g2];
            }
        }
        out
    }

    /// The augmentation `ε`: sum of all coefficients (`a -> 1`, `b -> 1`).
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The ring homomorphism `t` determined by `a -> 1`, `b -> -1`.
    pub fn t_map(&self) -> BigInt {
        let m = self.ctx.rotation_order();
        let mut acc = BigInt::zero();
        for (g, c) in self.coeffs.iter().enumerate() {
            if g < m {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Matrix of `y -> self * y` on coefficient columns; a ring
    /// homomorphism into `4n x 4n` integer matrices.
    pub fn left_mul_matrix(&self) -> IntMatrix {
        let d = self.ctx.ring_dim();
        let mut m = IntMatrix::zero(d, d);
        for g1 in 0..d {
            if self.coeffs[g1].is_zero() {
                continue;
            }
            for g2 in 0..d {
                let g = self.ctx.group_mul(g1, g2);
                *m.entry_mut(g, g2) += &self.coeffs[g1];
            }
        }
        m
    }

    /// Matrix of `y -> y * self` on coefficient columns.
    pub fn right_mul_matrix(&self) -> IntMatrix {
        let d = self.ctx.ring_dim();
        let mut m = IntMatrix::zero(d, d);
        for g2 in 0..d {
            if self.coeffs[g2].is_zero() {
                continue;
            }
            for g1 in 0..d {
                let g = self.ctx.group_mul(g1, g2);
                *m.entry_mut(g, g1) += &self.coeffs[g2];
            }
        }
        m
    }
}

impl core::ops::Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        RingElement::add(self, rhs)
    }
}

impl core::ops::Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        RingElement::sub(self, rhs)
    }
}

impl core::ops::Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        RingElement::mul(self, rhs)
    }
}

impl core::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::neg(self)
    }
}

/// Canonical text form: signed `c*a^i*b^j` terms in index order, zero
/// terms omitted, e.g. `1 - a + 2*a^3*b`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in 0..self.ctx.group_order() {
            let c = &self.coeffs[g];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let (i, j) = self.ctx.decompose(g);
            let mut wrote_mag = false;
            if !mag.is_one() || (i == 0 && j == 0) {
                write!(f, "{mag}")?;
                wrote_mag = true;
            }
            if i > 0 {
                if wrote_mag {
                    f.write_str("*")?;
                }
                if i == 1 {
                    f.write_str("a")?;
                } else {
                    write!(f, "a^{i}")?;
                }
                wrote_mag = true;
            }
            if j == 1 {
                if wrote_mag {
                    f.write_str("*")?;
                }
                f.write_str("b")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// vectors in free modules

/// An element of the free right module `ZD^k`, stored blockwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement {
    ctx: DihedralContext,
    blocks: Vec<RingElement>,
}

impl ModuleElement {
    pub fn zero(ctx: DihedralContext, k: usize) -> Self {
        ModuleElement {
            ctx,
            blocks: (0..k).map(|_| RingElement::zero(ctx)).collect(),
        }
    }

    pub fn from_blocks(blocks: Vec<RingElement>) -> Self {
        assert!(!blocks.is_empty(), "rank-zero module element");
        let ctx = blocks[0].context();
        assert!(blocks.iter().all(|b| b.context() == ctx));
        ModuleElement { ctx, blocks }
    }

    /// `E_i * x`: the basis vector `E_i` scaled by a ring element.
    pub fn basis_times(ctx: DihedralContext, k: usize, i: usize, x: &RingElement) -> Self {
        let mut v = Self::zero(ctx, k);
        v.blocks[i] = x.clone();
        v
    }

    pub fn context(&self) -> DihedralContext {
        self.ctx
    }

    pub fn free_rank(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, i: usize) -> &RingElement {
        &self.blocks[i]
    }

    pub fn blocks(&self) -> &[RingElement] {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(RingElement::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.blocks.len(), other.blocks.len());
        ModuleElement {
            ctx: self.ctx,
            blocks: self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.blocks.len(), other.blocks.len());
        ModuleElement {
            ctx: self.ctx,
            blocks: self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ModuleElement {
            ctx: self.ctx,
            blocks: self.blocks.iter().map(RingElement::neg).collect(),
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        ModuleElement {
            ctx: self.ctx,
            blocks: self.blocks.iter().map(|b| b.scaled(c)).collect(),
        }
    }

    /// The right module action `v -> v * x`.
    pub fn right_mul(&self, x: &RingElement) -> Self {
        ModuleElement {
            ctx: self.ctx,
            blocks: self.blocks.iter().map(|b| b.mul(x)).collect(),
        }
    }

    /// Flattened ambient coordinates in `Z^(4n*k)`, block `i` occupying
    /// positions `[4n*i, 4n*(i+1))`.
    pub fn to_ambient(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.ctx.ring_dim() * self.blocks.len());
        for b in &self.blocks {
            out.extend(b.coeffs().iter().cloned());
        }
        out
    }

    pub fn from_ambient(ctx: DihedralContext, k: usize, v: &[BigInt]) -> Self {
        let d = ctx.ring_dim();
        assert_eq!(v.len(), d * k, "ambient coordinate length");
        ModuleElement {
            ctx,
            blocks: (0..k)
                .map(|i| RingElement::from_coeffs(ctx, v[d * i..d * (i + 1)].to_vec()))
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// ring matrices

/// An `m x k` matrix over `Z[D]` representing the right-module
/// homomorphism `ZD^k -> ZD^m` that sends the domain basis vector `E_i`
/// to `Σ_j e_j * entry(j, i)`. Columns index the domain, rows the
/// codomain; composition of maps is the matrix product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMatrix {
    ctx: DihedralContext,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl RingMatrix {
    pub fn zero(ctx: DihedralContext, rows: usize, cols: usize) -> Self {
        RingMatrix {
            ctx,
            rows,
            cols,
            entries: (0..rows * cols).map(|_| RingElement::zero(ctx)).collect(),
        }
    }

    pub fn identity(ctx: DihedralContext, dim: usize) -> Self {
        let mut m = Self::zero(ctx, dim, dim);
        for i in 0..dim {
            *m.entry_mut(i, i) = RingElement::one(ctx);
        }
        m
    }

    pub fn from_rows(ctx: DihedralContext, rows: Vec<Vec<RingElement>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let entries: Vec<RingElement> = rows.into_iter().flatten().collect();
        assert!(entries.iter().all(|e| e.context() == ctx), "mixed contexts");
        RingMatrix {
            ctx,
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn context(&self) -> DihedralContext {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &RingElement {
        &self.entries[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut RingElement {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    /// Composition: `(self * other)` represents `self ∘ other`.
    pub fn mul(&self, other: &RingMatrix) -> RingMatrix {
        assert!(self.ctx == other.ctx, "mixed dihedral contexts");
        assert_eq!(self.cols, other.rows, "ring matrix product dimensions");
        let mut out = RingMatrix::zero(self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RingElement::zero(self.ctx);
                for k in 0..self.cols {
                    let a = self.entry(i, k);
                    if !a.is_zero() {
                        acc = acc.add(&a.mul(other.entry(k, j)));
                    }
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        out
    }

    /// Apply the homomorphism to a module element:
    /// `w_j = Σ_i entry(j, i) * v_i` (left multiplication blockwise).
    pub fn apply(&self, v: &ModuleElement) -> ModuleElement {
        assert_eq!(v.free_rank(), self.cols, "module element rank mismatch");
        let blocks = (0..self.rows)
            .map(|j| {
                let mut acc = RingElement::zero(self.ctx);
                for i in 0..self.cols {
                    let a = self.entry(j, i);
                    if !a.is_zero() && !v.block(i).is_zero() {
                        acc = acc.add(&a.mul(v.block(i)));
                    }
                }
                acc
            })
            .collect();
        ModuleElement {
            ctx: self.ctx,
            blocks,
        }
    }

    /// The integer realization: the `(4n*rows) x (4n*cols)` block matrix
    /// whose `(j, i)` block is `left_mul_matrix(entry(j, i))`. Realization
    /// of a composition is the product of realizations.
    pub fn realize(&self) -> IntMatrix {
        let d = self.ctx.ring_dim();
        let mut out = IntMatrix::zero(d * self.rows, d * self.cols);
        for j in 0..self.rows {
            for i in 0..self.cols {
                let e = self.entry(j, i);
                if e.is_zero() {
                    continue;
                }
                let block = e.left_mul_matrix();
                for p in 0..d {
                    for q in 0..d {
                        let v = block.entry(p, q);
                        if !v.is_zero() {
                            *out.entry_mut(d * j + p, d * i + q) = v.clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// Rows rendered in the canonical element text form, for reports.
    pub fn to_text_rows(&self) -> Vec<Vec<String>> {
        use alloc::string::ToString;
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j).to_string()).collect())
            .collect()
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[ ")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            f.write_str(" ]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(n: usize) -> DihedralContext {
        DihedralContext::new(n).unwrap()
    }

    #[test]
    fn rejects_order_zero() {
        assert_eq!(DihedralContext::new(0), Err(Error::InvalidGroupOrder));
    }

    #[test]
    fn index_map_is_bijective() {
        for n in 1..=4 {
            let c = ctx(n);
            let mut seen = vec![false; c.group_order()];
            for i in 0..c.rotation_order() {
                for j in 0..2 {
                    let g = c.index(i, j);
                    assert!(!seen[g]);
                    seen[g] = true;
                    assert_eq!(c.decompose(g), (i, j));
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn group_mul_examples() {
        let c = ctx(3);
        let a = c.index(1, 0);
        let b = c.index(0, 1);
        // a * b = ab
        assert_eq!(c.group_mul(a, b), c.index(1, 1));
        // b * a = a^(2n-1) b, forced by aba = b
        assert_eq!(c.group_mul(b, a), c.index(c.rotation_order() - 1, 1));
        // b * b = 1
        assert_eq!(c.group_mul(b, b), c.index(0, 0));
    }

    #[test]
    fn group_relations_hold() {
        for n in 1..=3 {
            let c = ctx(n);
            let a = c.index(1, 0);
            let b = c.index(0, 1);
            let mut apow = c.index(0, 0);
            for _ in 0..c.rotation_order() {
                apow = c.group_mul(apow, a);
            }
            assert_eq!(apow, c.index(0, 0)); // a^(2n) = 1
            assert_eq!(c.group_mul(b, b), c.index(0, 0)); // b^2 = 1
            let aba = c.group_mul(c.group_mul(a, b), a);
            assert_eq!(aba, b); // aba = b
            for g in c.elements() {
                assert_eq!(c.group_mul(g, c.group_inv(g)), c.index(0, 0));
            }
        }
    }

    #[test]
    fn sigma_absorbs_rotations() {
        let c = ctx(2);
        let sigma = RingElement::sigma(c);
        let a = RingElement::gen_a(c);
        assert_eq!(sigma.mul(&a), sigma);
        assert_eq!(a.mul(&sigma), sigma);
        // Σ(a - 1) = 0
        let one = RingElement::one(c);
        assert!(sigma.mul(&a.sub(&one)).is_zero());
    }

    #[test]
    fn one_plus_b_times_one_minus_b_vanishes() {
        let c = ctx(2);
        let one = RingElement::one(c);
        let b = RingElement::gen_b(c);
        let p = one.add(&b).mul(&one.sub(&b));
        assert!(p.is_zero(), "(1+b)(1-b) = 1 - b^2 = 0");
    }

    #[test]
    fn augmentation_and_t_examples() {
        let c = ctx(3);
        let sigma = RingElement::sigma(c);
        let n_sum = RingElement::group_sum(c);
        let one = RingElement::one(c);
        let a = RingElement::gen_a(c);
        let b = RingElement::gen_b(c);
        assert_eq!(sigma.augmentation(), BigInt::from(6));
        assert_eq!(one.sub(&a).augmentation(), BigInt::zero());
        assert_eq!(n_sum.augmentation(), BigInt::from(12));
        assert_eq!(one.sub(&b).t_map(), BigInt::from(2));
        assert_eq!(sigma.t_map(), BigInt::from(6));
        assert_eq!(n_sum.t_map(), BigInt::zero());
    }

    #[test]
    fn left_mul_matrix_examples() {
        let c = ctx(2);
        let one = RingElement::one(c);
        let b = RingElement::gen_b(c);
        assert_eq!(one.left_mul_matrix(), IntMatrix::identity(8));
        // (1+b) and (1-b) realize to annihilating matrices
        let p = one.add(&b).left_mul_matrix();
        let q = one.sub(&b).left_mul_matrix();
        assert!(p.mul(&q).is_zero());
        // right multiplications likewise
        let rp = one.add(&b).right_mul_matrix();
        let rq = one.sub(&b).right_mul_matrix();
        assert!(rp.mul(&rq).is_zero());
        // Σ(a-1) = 0 via the right action
        let sigma = RingElement::sigma(c);
        let am1 = RingElement::gen_a(c).sub(&one);
        let out = am1.right_mul_matrix().apply(sigma.coeffs());
        assert!(out.iter().all(Zero::is_zero));
    }

    #[test]
    fn display_canonical_form() {
        use alloc::string::ToString;
        let c = ctx(3);
        let mut e = RingElement::zero(c);
        e = e.add(&RingElement::one(c));
        e = e.sub(&RingElement::gen_a(c));
        e = e.add(&RingElement::monomial(c, 3, 1).scaled(2));
        assert_eq!(e.to_string(), "1 - a + 2*a^3*b");
        assert_eq!(RingElement::zero(c).to_string(), "0");
        assert_eq!(RingElement::gen_b(c).neg().to_string(), "-b");
        assert_eq!(RingElement::sigma(ctx(1)).to_string(), "1 + a");
    }

    #[test]
    fn realize_respects_identity() {
        let c = ctx(1);
        let m = RingMatrix::identity(c, 1);
        assert_eq!(m.realize(), IntMatrix::identity(4));
    }

    fn arb_element(n: usize) -> impl Strategy<Value = RingElement> {
        let c = ctx(n);
        proptest::collection::vec(-5i64..=5, c.ring_dim())
            .prop_map(move |v| RingElement::from_i64_coeffs(c, &v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_is_associative_and_distributive(
            x in arb_element(2), y in arb_element(2), z in arb_element(2)
        ) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            let one = RingElement::one(x.context());
            prop_assert_eq!(x.mul(&one), x.clone());
            prop_assert_eq!(one.mul(&x), x.clone());
        }

        #[test]
        fn augmentation_and_t_are_ring_homs(x in arb_element(2), y in arb_element(2)) {
            let p = x.mul(&y);
            prop_assert_eq!(p.augmentation(), x.augmentation() * y.augmentation());
            prop_assert_eq!(p.t_map(), x.t_map() * y.t_map());
        }

        #[test]
        fn left_mul_matrix_matches_ring_mul(x in arb_element(2), y in arb_element(2)) {
            let lhs = x.left_mul_matrix().apply(y.coeffs());
            prop_assert_eq!(lhs, x.mul(&y).coeffs().to_vec());
        }

        #[test]
        fn right_mul_matrix_matches_ring_mul(x in arb_element(2), y in arb_element(2)) {
            let lhs = x.right_mul_matrix().apply(y.coeffs());
            prop_assert_eq!(lhs, y.mul(&x).coeffs().to_vec());
        }

        #[test]
        fn left_mul_matrix_is_a_ring_hom(x in arb_element(1), y in arb_element(1)) {
            let lhs = x.mul(&y).left_mul_matrix();
            let rhs = x.left_mul_matrix().mul(&y.left_mul_matrix());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn realize_is_functorial(
            xs in proptest::collection::vec(-3i64..=3, 4 * 2 * 2),
            ys in proptest::collection::vec(-3i64..=3, 4 * 2 * 2),
        ) {
            // A: 1x2, B: 2x2 over Z[D_4]
            let c = ctx(1);
            let d = c.ring_dim();
            let elem = |v: &[i64]| RingElement::from_i64_coeffs(c, v);
            let a = RingMatrix::from_rows(c, vec![vec![elem(&xs[0..d]), elem(&xs[d..2*d])]]);
            let b = RingMatrix::from_rows(c, vec![
                vec![elem(&ys[0..d]), elem(&ys[d..2*d])],
                vec![elem(&xs[2*d..3*d]), elem(&ys[2*d..3*d])],
            ]);
            let lhs = a.mul(&b).realize();
            let rhs = a.realize().mul(&b.realize());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn realization_matches_apply(
            xs in proptest::collection::vec(-3i64..=3, 4 * 2 * 2),
            vs in proptest::collection::vec(-3i64..=3, 4 * 2),
        ) {
            let c = ctx(1);
            let d = c.ring_dim();
            let elem = |v: &[i64]| RingElement::from_i64_coeffs(c, v);
            let m = RingMatrix::from_rows(c, vec![vec![elem(&xs[0..d]), elem(&xs[d..2*d])],
                                                  vec![elem(&xs[2*d..3*d]), elem(&xs[3*d..4*d])]]);
            let v = ModuleElement::from_blocks(vec![elem(&vs[0..d]), elem(&vs[d..2*d])]);
            let via_matrix = m.realize().apply(&v.to_ambient());
            prop_assert_eq!(via_matrix, m.apply(&v).to_ambient());
        }
    }
}
