use std::fmt;

use super::QuiverModule;
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// A homomorphism of representations, one matrix block per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    source: QuiverModule,
    target: QuiverModule,
    blocks: Vec<Mat>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleMap")
            .field("source", &self.source.dims())
            .field("target", &self.target.dims())
            .field("blocks", &self.blocks)
            .finish()
    }
}

impl ModuleMap {
    /// Checks block shapes and the intertwining equations `N_α f_s = f_t M_α`.
    pub fn new(source: QuiverModule, target: QuiverModule, blocks: Vec<Mat>) -> Result<Self> {
        source.ensure_same_algebra(&target)?;
        if blocks.len() != source.dims().len() {
            return Err(Error::DimensionMismatch("one block per vertex required".into()));
        }
        for (v, b) in blocks.iter().enumerate() {
            if (b.rows(), b.cols()) != (target.dims()[v], source.dims()[v]) {
                return Err(Error::DimensionMismatch(format!(
                    "block at vertex {} is {}x{}, expected {}x{}",
                    v + 1,
                    b.rows(),
                    b.cols(),
                    target.dims()[v],
                    source.dims()[v]
                )));
            }
        }
        let map = ModuleMap { source, target, blocks };
        if !map.is_intertwining() {
            return Err(Error::NotIntertwining("blocks do not commute with the arrow actions".into()));
        }
        Ok(map)
    }

    pub(crate) fn from_parts(source: QuiverModule, target: QuiverModule, blocks: Vec<Mat>) -> Self {
        let map = ModuleMap { source, target, blocks };
        debug_assert!(map.is_intertwining());
        map
    }

    pub fn identity(m: &QuiverModule) -> Self {
        let blocks = m.dims().iter().map(|&d| Mat::identity(m.field(), d)).collect();
        ModuleMap { source: m.clone(), target: m.clone(), blocks }
    }

    pub fn zero(source: &QuiverModule, target: &QuiverModule) -> Result<Self> {
        source.ensure_same_algebra(target)?;
        let blocks = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| Mat::zeros(source.field(), t, s))
            .collect();
        Ok(ModuleMap { source: source.clone(), target: target.clone(), blocks })
    }

    pub fn source(&self) -> &QuiverModule {
        &self.source
    }

    pub fn target(&self) -> &QuiverModule {
        &self.target
    }

    pub fn block(&self, vertex: usize) -> &Mat {
        &self.blocks[vertex]
    }

    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    pub fn is_intertwining(&self) -> bool {
        let quiver = self.source.algebra().quiver();
        (0..quiver.arrow_count()).all(|a| {
            let (s, t) = quiver.arrow(a);
            let lhs = self.target.arrow_action(a).mul(&self.blocks[s]);
            let rhs = self.blocks[t].mul(self.source.arrow_action(a));
            matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.source {
            return Err(Error::SourceMismatch("composition of non-matching maps".into()));
        }
        let blocks = other
            .blocks
            .iter()
            .zip(&self.blocks)
            .map(|(g, f)| g.mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap { source: self.source.clone(), target: other.target.clone(), blocks })
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::SourceMismatch("sum of maps with different ends".into()));
        }
        let blocks =
            self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap { source: self.source.clone(), target: self.target.clone(), blocks })
    }

    pub fn scale(&self, s: u32) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Mat::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(Mat::is_invertible)
    }

    /// All block entries, vertex by vertex, as one coordinate vector.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.entries().iter().copied()).collect()
    }
}

/// A basis of `Hom(M, N)`, found as the null space of the intertwining system.
pub fn hom_basis(m: &QuiverModule, n: &QuiverModule) -> Result<Vec<ModuleMap>> {
    m.ensure_same_algebra(n)?;
    let f = m.field();
    let quiver = m.algebra().quiver();
    let verts = quiver.vertex_count();
    let mut offsets = Vec::with_capacity(verts);
    let mut unknowns = 0;
    for v in 0..verts {
        offsets.push(unknowns);
        unknowns += n.dims()[v] * m.dims()[v];
    }
    // variable for entry (r, c) of f_v
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims()[v] + c;

    let equations: usize = (0..quiver.arrow_count())
        .map(|a| {
            let (s, t) = quiver.arrow(a);
            n.dims()[t] * m.dims()[s]
        })
        .sum();
    let mut sys = Mat::zeros(f, equations, unknowns);
    let mut row = 0;
    for a in 0..quiver.arrow_count() {
        let (s, t) = quiver.arrow(a);
        let na = n.arrow_action(a);
        let ma = m.arrow_action(a);
        // (N_a f_s - f_t M_a)[i, j] = 0
        for i in 0..n.dims()[t] {
            for j in 0..m.dims()[s] {
                for k in 0..n.dims()[s] {
                    let c = na.get(i, k);
                    if c != 0 {
                        let x = var(s, k, j);
                        sys.set(row, x, f.add(sys.get(row, x), c));
                    }
                }
                for k in 0..m.dims()[t] {
                    let c = ma.get(k, j);
                    if c != 0 {
                        let x = var(t, i, k);
                        sys.set(row, x, f.sub(sys.get(row, x), c));
                    }
                }
                row += 1;
            }
        }
    }
    Ok(sys
        .kernel_basis()
        .into_iter()
        .map(|sol| {
            let blocks = (0..verts)
                .map(|v| {
                    let mut b = Mat::zeros(f, n.dims()[v], m.dims()[v]);
                    for r in 0..n.dims()[v] {
                        for c in 0..m.dims()[v] {
                            b.set(r, c, sol[var(v, r, c)]);
                        }
                    }
                    b
                })
                .collect();
            ModuleMap::from_parts(m.clone(), n.clone(), blocks)
        })
        .collect())
}

/// The kernel of `f` with its inclusion into the source.
pub fn kernel(f: &ModuleMap) -> (QuiverModule, ModuleMap) {
    let src = f.source();
    let alg = src.algebra();
    let quiver = alg.quiver();
    let incl: Vec<Mat> = f.blocks().iter().map(Mat::kernel_matrix).collect();
    let dims: Vec<usize> = incl.iter().map(Mat::cols).collect();
    let arrows = (0..quiver.arrow_count())
        .map(|a| {
            let (s, t) = quiver.arrow(a);
            let image = src.arrow_action(a).mul(&incl[s]).expect("shapes agree");
            incl[t]
                .solve_matrix(&image)
                .expect("shapes agree")
                .expect("kernel is a submodule")
        })
        .collect();
    let k = QuiverModule::from_parts(alg, dims, arrows);
    let inclusion = ModuleMap::from_parts(k.clone(), src.clone(), incl);
    (k, inclusion)
}

/// The cokernel of `f` with the projection from the target.
pub fn cokernel(f: &ModuleMap) -> (QuiverModule, ModuleMap) {
    let tgt = f.target();
    let alg = tgt.algebra();
    let quiver = alg.quiver();
    // rows of q_v span the left null space of f_v
    let proj: Vec<Mat> = f.blocks().iter().map(|b| b.transpose().kernel_matrix().transpose()).collect();
    let dims: Vec<usize> = proj.iter().map(Mat::rows).collect();
    let arrows = (0..quiver.arrow_count())
        .map(|a| {
            let (s, t) = quiver.arrow(a);
            // C_a q_s = q_t N_a
            let rhs = proj[t].mul(tgt.arrow_action(a)).expect("shapes agree");
            proj[s]
                .transpose()
                .solve_matrix(&rhs.transpose())
                .expect("shapes agree")
                .expect("image is a submodule")
                .transpose()
        })
        .collect();
    let c = QuiverModule::from_parts(alg, dims, arrows);
    let projection = ModuleMap::from_parts(tgt.clone(), c.clone(), proj);
    (c, projection)
}

/// Given a surjection `q: N -> C` and `g: N -> Y` vanishing on `ker q`,
/// returns the unique `h: C -> Y` with `h ∘ q = g`.
pub fn factor_through_cokernel(q: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
    if q.source() != g.source() {
        return Err(Error::SourceMismatch("maps must share their source".into()));
    }
    let blocks = q
        .blocks()
        .iter()
        .zip(g.blocks())
        .map(|(qv, gv)| {
            qv.transpose()
                .solve_matrix(&gv.transpose())?
                .map(|h| h.transpose())
                .ok_or_else(|| Error::Internal("map does not vanish on the kernel".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleMap::new(q.target().clone(), g.target().clone(), blocks)
}

/// Given an injection `i: K -> S` and `g: X -> S` with image inside `K`,
/// returns the unique `h: X -> K` with `i ∘ h = g`.
pub fn lift_through_injection(i: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
    if i.target() != g.target() {
        return Err(Error::SourceMismatch("maps must share their target".into()));
    }
    let blocks = i
        .blocks()
        .iter()
        .zip(g.blocks())
        .map(|(iv, gv)| {
            iv.solve_matrix(gv)?.ok_or_else(|| Error::Internal("image escapes the submodule".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleMap::new(g.source().clone(), i.source().clone(), blocks)
}
