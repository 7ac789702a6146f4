//! Lattices with a compatible right group action.
//!
//! A [`GModule`] is a sublattice of the integer realization of a free
//! module `ZD^k`, closed under the right action of the dihedral group
//! (it suffices to check the generators `a` and `b`). This is the carrier
//! for every module, ideal and kernel the verification suite touches.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::groupring::{DihedralContext, ModuleElement, RingElement, RingMatrix};
use crate::intlat::{self, IntMatrix, Lattice};

/// A `D`-stable sublattice of `Z^(4n*k)`, the realization of `ZD^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    ctx: DihedralContext,
    free_rank: usize,
    lattice: Lattice,
}

/// Kernel and image of a realized ring-matrix map, both `D`-stable.
#[derive(Clone, Debug)]
pub struct GMapKernelResult {
    pub kernel: GModule,
    pub image: GModule,
}

/// Result of multiplying a module by a ring element on the right.
#[derive(Clone, Debug)]
pub struct SubmoduleProduct {
    pub module: GModule,
    /// Whether closing under the group action enlarged the plain image
    /// lattice (it cannot for central multipliers such as `a - 1`).
    pub closure_enlarged: bool,
}

/// Right translation by a group element permutes ambient coordinates
/// blockwise: block `i` of `v * g` at position `h * g` is block `i` of `v`
/// at `h`.
fn translate_row(ctx: DihedralContext, k: usize, g: usize, row: &[BigInt]) -> Vec<BigInt> {
    let d = ctx.ring_dim();
    debug_assert_eq!(row.len(), d * k);
    let mut out = alloc::vec![BigInt::zero(); row.len()];
    for block in 0..k {
        for h in 0..d {
            let c = &row[d * block + h];
            if !c.is_zero() {
                out[d * block + ctx.group_mul(h, g)] = c.clone();
            }
        }
    }
    out
}

/// `v * x` on ambient coordinates for an arbitrary ring element `x`.
fn right_mul_row(ctx: DihedralContext, k: usize, x: &RingElement, row: &[BigInt]) -> Vec<BigInt> {
    let d = ctx.ring_dim();
    let mut out = alloc::vec![BigInt::zero(); row.len()];
    for (g, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for block in 0..k {
            for h in 0..d {
                let v = &row[d * block + h];
                if !v.is_zero() {
                    out[d * block + ctx.group_mul(h, g)] += v * c;
                }
            }
        }
    }
    out
}

impl GModule {
    /// Wrap a lattice, verifying closure under the action of `a` and `b`.
    pub fn from_lattice(
        ctx: DihedralContext,
        free_rank: usize,
        lattice: Lattice,
    ) -> Result<Self, Error> {
        if lattice.ambient_dim() != ctx.ring_dim() * free_rank {
            return Err(Error::DimensionMismatch {
                expected: ctx.ring_dim() * free_rank,
                found: lattice.ambient_dim(),
            });
        }
        let m = GModule {
            ctx,
            free_rank,
            lattice,
        };
        if !m.is_action_closed() {
            return Err(Error::ActionClosureViolated);
        }
        Ok(m)
    }

    /// The full free module `ZD^k`.
    pub fn free(ctx: DihedralContext, k: usize) -> Self {
        GModule {
            ctx,
            free_rank: k,
            lattice: Lattice::full(ctx.ring_dim() * k),
        }
    }

    /// The smallest `D`-stable lattice containing the generators: the
    /// `Z`-span of all group translates `gen * g`.
    pub fn generated_by(ctx: DihedralContext, k: usize, generators: &[ModuleElement]) -> Self {
        let mut rows = Vec::with_capacity(generators.len() * ctx.group_order());
        for gen in generators {
            assert_eq!(gen.free_rank(), k, "generator rank mismatch");
            let base = gen.to_ambient();
            for g in ctx.elements() {
                rows.push(translate_row(ctx, k, g, &base));
            }
        }
        GModule {
            ctx,
            free_rank: k,
            lattice: Lattice::from_rows(ctx.ring_dim() * k, rows),
        }
    }

    pub fn context(&self) -> DihedralContext {
        self.ctx
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// `Z`-rank of the module.
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn contains(&self, v: &ModuleElement) -> bool {
        v.free_rank() == self.free_rank
            && self
                .lattice
                .contains(&v.to_ambient())
                .expect("ambient dimensions agree")
    }

    /// Closure under the generators of the group action.
    pub fn is_action_closed(&self) -> bool {
        let gens = [self.ctx.index(1, 0), self.ctx.index(0, 1)];
        for g in gens {
            for row in self.lattice.basis() {
                let t = translate_row(self.ctx, self.free_rank, g, row);
                if !self.lattice.contains(&t).expect("same ambient") {
                    return false;
                }
            }
        }
        true
    }

    /// Basis rows as module elements.
    pub fn basis_elements(&self) -> Vec<ModuleElement> {
        self.lattice
            .basis()
            .iter()
            .map(|r| ModuleElement::from_ambient(self.ctx, self.free_rank, r))
            .collect()
    }

    /// The image lattice `{m * x : m in self}`, closed under the action;
    /// reports whether the closure step enlarged the plain image.
    pub fn submodule_times(&self, x: &RingElement) -> SubmoduleProduct {
        let plain: Vec<Vec<BigInt>> = self
            .lattice
            .basis()
            .iter()
            .map(|r| right_mul_row(self.ctx, self.free_rank, x, r))
            .collect();
        let plain_lat = Lattice::from_rows(self.lattice.ambient_dim(), plain.clone());
        let mut rows = plain;
        for g in self.ctx.elements().skip(1) {
            let xg = x.mul(&RingElement::group_element(self.ctx, g));
            for r in self.lattice.basis() {
                rows.push(right_mul_row(self.ctx, self.free_rank, &xg, r));
            }
        }
        let closed = Lattice::from_rows(self.lattice.ambient_dim(), rows);
        let closure_enlarged = closed != plain_lat;
        SubmoduleProduct {
            module: GModule {
                ctx: self.ctx,
                free_rank: self.free_rank,
                lattice: closed,
            },
            closure_enlarged,
        }
    }

    /// Image of the module under a realized integer map into `ZD^m`,
    /// re-wrapped with the closure check.
    pub fn map_by(&self, map: &IntMatrix, codomain_rank: usize) -> Result<GModule, Error> {
        let rows = self
            .lattice
            .basis()
            .iter()
            .map(|r| map.apply(r))
            .collect();
        GModule::from_lattice(
            self.ctx,
            codomain_rank,
            Lattice::from_rows(map.rows(), rows),
        )
    }
}

/// Kernel and image of the integer realization of a ring-matrix map. Both
/// are `D`-stable by construction; a closure failure signals a
/// realization bug and surfaces as an error.
pub fn kernel_image(map: &RingMatrix) -> Result<GMapKernelResult, Error> {
    let r = map.realize();
    let kernel = GModule::from_lattice(map.context(), map.cols(), intlat::kernel(&r))?;
    let image = GModule::from_lattice(map.context(), map.rows(), intlat::image(&r))?;
    Ok(GMapKernelResult { kernel, image })
}

/// Left annihilator `{mu in ZD : mu * x = 0 for all x in the ideal}` of a
/// right ideal, presented inside `Z^(4n)`.
pub fn annihilator_left(ideal: &GModule) -> Result<Lattice, Error> {
    if ideal.free_rank() != 1 {
        return Err(Error::AmbientRankNotOne);
    }
    let ctx = ideal.context();
    if ideal.rank() == 0 {
        return Ok(Lattice::full(ctx.ring_dim()));
    }
    // mu * x is right multiplication by x applied to mu, so stack the
    // right-multiplication matrices of a Z-spanning set of the ideal.
    let blocks: Vec<IntMatrix> = ideal
        .lattice()
        .basis()
        .iter()
        .map(|row| RingElement::from_coeffs(ctx, row.clone()).right_mul_matrix())
        .collect();
    let refs: Vec<&IntMatrix> = blocks.iter().collect();
    Ok(intlat::kernel(&IntMatrix::vstack(&refs)))
}

/// The multiplier lattice `{mu in ZD : mu * s in dst for every basis
/// element s of src}`, realizing module homomorphisms `src -> dst` by
/// left multiplication.
pub fn multiplier_lattice(src: &GModule, dst: &GModule) -> Result<Lattice, Error> {
    if src.free_rank() != 1 || dst.free_rank() != 1 {
        return Err(Error::AmbientRankNotOne);
    }
    let ctx = src.context();
    let mut result = Lattice::full(ctx.ring_dim());
    for row in src.lattice().basis() {
        let s = RingElement::from_coeffs(ctx, row.clone());
        let pre = intlat::preimage(&s.right_mul_matrix(), dst.lattice())?;
        result = result.intersect(&pre)?;
    }
    Ok(result)
}

/// Action of a group element on basis coordinates: row `i` holds the
/// coordinates of `basis_i * g` in the basis.
fn action_on_basis(module: &GModule, g: usize) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = module
        .lattice()
        .basis()
        .iter()
        .map(|r| {
            let t = translate_row(module.context(), module.free_rank(), g, r);
            module
                .lattice()
                .coordinates_of(&t)
                .expect("module is action closed")
        })
        .collect();
    IntMatrix::from_rows(rows)
}

/// A `Z`-basis of the lattice of `Z`-linear maps `src -> dst` commuting
/// with the right action of `a` and `b`, i.e. of the right-module
/// homomorphisms. Each basis map is returned as its matrix on the
/// canonical lattice bases (rows index `src` basis vectors).
pub fn hom_lattice(src: &GModule, dst: &GModule) -> Vec<IntMatrix> {
    let rs = src.rank();
    let rd = dst.rank();
    if rs == 0 || rd == 0 {
        return Vec::new();
    }
    let gens = [
        src.context().index(1, 0),
        src.context().index(0, 1),
    ];
    // Unknown F (rs x rd), flattened row-major; equations
    // A_src(g) F = F A_dst(g) for both generators.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(2 * rs * rd);
    for g in gens {
        let a_src = action_on_basis(src, g);
        let a_dst = action_on_basis(dst, g);
        for i in 0..rs {
            for j in 0..rd {
                let mut row = alloc::vec![BigInt::zero(); rs * rd];
                for k in 0..rs {
                    row[k * rd + j] += a_src.entry(i, k);
                }
                for l in 0..rd {
                    row[i * rd + l] -= a_dst.entry(l, j);
                }
                rows.push(row);
            }
        }
    }
    let ker = intlat::kernel(&IntMatrix::from_rows(rows));
    ker.basis()
        .iter()
        .map(|flat| {
            IntMatrix::from_fn(rs, rd, |i, j| flat[i * rd + j].clone())
        })
        .collect()
}

// ---------------------------------------------------------------------------
