//! Finite-dimensional left modules as quiver representations.
//!
//! Convention: arrow `α: i -> j` acts by a `dim_j × dim_i` matrix on column
//! vectors, and a path acts by following its arrows in written order, so
//! `M_{αβ} = M_β · M_α`.

mod cover;
mod iso;
mod map;

use std::fmt;
use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Mat};

pub use cover::{free_module, is_projective, map_from_free, projective_cover, FreeModule, ProjectiveCover};
pub use iso::{decompose_serial, find_isomorphism, is_isomorphic, IsoDecision, SerialSummand};
pub use map::{cokernel, factor_through_cokernel, hom_basis, kernel, lift_through_injection, ModuleMap};

/// A representation of the bound quiver of `algebra`.
#[derive(Clone)]
pub struct QuiverModule {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    arrows: Vec<Mat>,
}

impl PartialEq for QuiverModule {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
            && self.dims == other.dims
            && self.arrows == other.arrows
    }
}

impl Eq for QuiverModule {}

impl fmt::Debug for QuiverModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuiverModule").field("dims", &self.dims).field("arrows", &self.arrows).finish()
    }
}

impl QuiverModule {
    /// Validates shapes and that every path of length `nilpotency` acts as zero.
    pub fn new(algebra: &Arc<BoundQuiverAlgebra>, dims: Vec<usize>, arrows: Vec<Mat>) -> Result<Self> {
        let quiver = algebra.quiver();
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "dimension vector has {} entries for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if arrows.len() != quiver.arrow_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} arrow matrices for {} arrows",
                arrows.len(),
                quiver.arrow_count()
            )));
        }
        for (a, m) in arrows.iter().enumerate() {
            let (s, t) = quiver.arrow(a);
            if (m.rows(), m.cols()) != (dims[t], dims[s]) || m.field() != algebra.field() {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix over GF({}), got {}x{}",
                    a,
                    dims[t],
                    dims[s],
                    algebra.field().characteristic(),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let module = QuiverModule { algebra: algebra.clone(), dims, arrows };
        let acts = module.path_actions();
        let longest = algebra.nilpotency() - 1;
        for (idx, p) in algebra.basis().iter().enumerate() {
            if p.len() != longest {
                continue;
            }
            for a in quiver.arrows_from(algebra.path_end(idx)) {
                if algebra.extend(idx, a).is_none() && !module.arrows[a].mul(&acts[idx])?.is_zero() {
                    return Err(Error::InvalidParameter(
                        "a path in the relation ideal acts nontrivially".into(),
                    ));
                }
            }
        }
        Ok(module)
    }

    pub(crate) fn from_parts(algebra: &Arc<BoundQuiverAlgebra>, dims: Vec<usize>, arrows: Vec<Mat>) -> Self {
        debug_assert_eq!(dims.len(), algebra.vertex_count());
        QuiverModule { algebra: algebra.clone(), dims, arrows }
    }

    pub fn zero(algebra: &Arc<BoundQuiverAlgebra>) -> Self {
        let dims = vec![0; algebra.vertex_count()];
        let arrows = (0..algebra.quiver().arrow_count())
            .map(|_| Mat::zeros(algebra.field(), 0, 0))
            .collect();
        QuiverModule::from_parts(algebra, dims, arrows)
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    /// Dimension vector; entry `k` belongs to vertex `k + 1`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn arrow_action(&self, arrow: usize) -> &Mat {
        &self.arrows[arrow]
    }

    /// Action matrices of every basis path of the algebra, indexed like the basis.
    pub fn path_actions(&self) -> Vec<Mat> {
        let alg = &*self.algebra;
        let mut acts: Vec<Option<Mat>> = vec![None; alg.dim()];
        for (idx, p) in alg.basis().iter().enumerate() {
            if p.is_empty() {
                acts[idx] = Some(Mat::identity(self.field(), self.dims[p.start()]));
            }
        }
        // basis is sorted by length, so prefixes are filled first
        for idx in 0..alg.dim() {
            let cur = acts[idx].clone().expect("prefix action computed");
            for a in alg.quiver().arrows_from(alg.path_end(idx)) {
                if let Some(next) = alg.extend(idx, a) {
                    acts[next] = Some(self.arrows[a].mul(&cur).expect("shapes agree"));
                }
            }
        }
        acts.into_iter().map(|m| m.expect("every basis path reached")).collect()
    }

    pub fn ensure_same_algebra(&self, other: &QuiverModule) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn direct_sum(&self, other: &QuiverModule) -> Result<QuiverModule> {
        self.ensure_same_algebra(other)?;
        let quiver = self.algebra.quiver();
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let arrows = (0..quiver.arrow_count())
            .map(|a| {
                let (s, t) = quiver.arrow(a);
                let mut m = Mat::zeros(self.field(), dims[t], dims[s]);
                m.set_block(0, 0, &self.arrows[a]);
                m.set_block(self.dims[t], self.dims[s], &other.arrows[a]);
                m
            })
            .collect();
        Ok(QuiverModule::from_parts(&self.algebra, dims, arrows))
    }

    /// Per-vertex column bases of the radical `J·M`.
    pub fn radical_basis(&self) -> Vec<Mat> {
        let quiver = self.algebra.quiver();
        (0..quiver.vertex_count())
            .map(|w| {
                let mut span = Mat::zeros(self.field(), self.dims[w], 0);
                for a in quiver.arrows_into(w) {
                    span = span.hstack(&self.arrows[a]).expect("same row count");
                }
                column_space(&span)
            })
            .collect()
    }

    /// Dimension vector of the top `M / J·M`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_basis().iter().zip(&self.dims).map(|(r, d)| d - r.cols()).collect()
    }
}

/// Independent columns spanning the column space of `m`.
pub(crate) fn column_space(m: &Mat) -> Mat {
    let pivots = m.rref().pivots;
    m.select_columns(&pivots)
}

/// The simple module at a 1-based vertex.
pub fn simple(algebra: &Arc<BoundQuiverAlgebra>, vertex: usize) -> Result<QuiverModule> {
    let v = algebra.vertex(vertex)?;
    let mut dims = vec![0; algebra.vertex_count()];
    dims[v] = 1;
    let quiver = algebra.quiver();
    let arrows = (0..quiver.arrow_count())
        .map(|a| {
            let (s, t) = quiver.arrow(a);
            Mat::zeros(algebra.field(), dims[t], dims[s])
        })
        .collect();
    Ok(QuiverModule::from_parts(algebra, dims, arrows))
}

/// The indecomposable projective `P_i`: basis paths starting at `i`, acted on
/// by path extension.
pub fn projective(algebra: &Arc<BoundQuiverAlgebra>, vertex: usize) -> Result<QuiverModule> {
    let v = algebra.vertex(vertex)?;
    Ok(free_module(algebra, &[v]).module().clone())
}

/// `P_i / J^len P_i`, the uniserial module with top `S_i` and length `len`
/// over a Nakayama algebra.
pub fn uniserial(algebra: &Arc<BoundQuiverAlgebra>, vertex: usize, len: usize) -> Result<QuiverModule> {
    let v = algebra.vertex(vertex)?;
    if len == 0 || len > algebra.nilpotency() {
        return Err(Error::InvalidParameter(format!(
            "length {len} outside 1..={}",
            algebra.nilpotency()
        )));
    }
    let quiver = algebra.quiver();
    let kept: Vec<usize> =
        algebra.paths_from(v).iter().copied().filter(|&i| algebra.path(i).len() < len).collect();
    let mut dims = vec![0; quiver.vertex_count()];
    let mut pos = vec![usize::MAX; algebra.dim()];
    for &i in &kept {
        let w = algebra.path_end(i);
        pos[i] = dims[w];
        dims[w] += 1;
    }
    let arrows = (0..quiver.arrow_count())
        .map(|a| {
            let (s, t) = quiver.arrow(a);
            let mut m = Mat::zeros(algebra.field(), dims[t], dims[s]);
            for &i in kept.iter().filter(|&&i| algebra.path_end(i) == s) {
                if let Some(j) = algebra.extend(i, a) {
                    if algebra.path(j).len() < len {
                        m.set(pos[j], pos[i], 1);
                    }
                }
            }
            m
        })
        .collect();
    Ok(QuiverModule::from_parts(algebra, dims, arrows))
}
