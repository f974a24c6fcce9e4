use std::collections::HashMap;
use std::sync::Arc;

use super::{ModuleMap, QuiverModule};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// A direct sum of indecomposable projectives `⊕ P_{v(g)}`, one summand per
/// generator `g`, with its path basis made explicit.
///
/// At vertex `w` the basis consists of the pairs `(g, p)` where `p` is a basis
/// path from `v(g)` to `w`, ordered by generator and then by path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    generators: Vec<usize>,
    layout: Vec<Vec<(usize, usize)>>,
    position: HashMap<(usize, usize), usize>,
    module: QuiverModule,
}

impl FreeModule {
    /// 0-based vertex of each generator.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn module(&self) -> &QuiverModule {
        &self.module
    }

    /// Basis of the vertex-`w` space as `(generator, path index)` pairs.
    pub fn layout(&self, w: usize) -> &[(usize, usize)] {
        &self.layout[w]
    }

    /// Position of the basis element `g · p` inside its vertex space.
    pub fn position(&self, generator: usize, path: usize) -> Option<usize> {
        self.position.get(&(generator, path)).copied()
    }

    /// Multiplicity of `P_v` for each 0-based vertex `v`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.layout.len()];
        for &g in &self.generators {
            m[g] += 1;
        }
        m
    }

    /// 1-based projective indices, one per generator.
    pub fn labels(&self) -> Vec<usize> {
        self.generators.iter().map(|v| v + 1).collect()
    }
}

/// Builds `⊕_g P_{generators[g]}` for 0-based generator vertices.
pub fn free_module(algebra: &Arc<BoundQuiverAlgebra>, generators: &[usize]) -> FreeModule {
    let quiver = algebra.quiver();
    let verts = quiver.vertex_count();
    let mut layout = vec![Vec::new(); verts];
    let mut position = HashMap::new();
    for (g, &v) in generators.iter().enumerate() {
        for &p in algebra.paths_from(v) {
            let w = algebra.path_end(p);
            position.insert((g, p), layout[w].len());
            layout[w].push((g, p));
        }
    }
    let dims: Vec<usize> = layout.iter().map(Vec::len).collect();
    let arrows = (0..quiver.arrow_count())
        .map(|a| {
            let (s, t) = quiver.arrow(a);
            let mut m = Mat::zeros(algebra.field(), dims[t], dims[s]);
            for (col, &(g, p)) in layout[s].iter().enumerate() {
                if let Some(q) = algebra.extend(p, a) {
                    m.set(position[&(g, q)], col, 1);
                }
            }
            m
        })
        .collect();
    let module = QuiverModule::from_parts(algebra, dims, arrows);
    FreeModule { generators: generators.to_vec(), layout, position, module }
}

/// The map `F -> M` sending generator `g` to `images[g] ∈ M_{v(g)}`.
pub fn map_from_free(free: &FreeModule, target: &QuiverModule, images: &[Vec<u32>]) -> Result<ModuleMap> {
    free.module.ensure_same_algebra(target)?;
    if images.len() != free.generators.len() {
        return Err(Error::DimensionMismatch("one image per generator required".into()));
    }
    for (g, &v) in free.generators.iter().enumerate() {
        if images[g].len() != target.dims()[v] {
            return Err(Error::DimensionMismatch(format!(
                "image of generator {g} must live at vertex {}",
                v + 1
            )));
        }
    }
    let acts = target.path_actions();
    let f = target.field();
    let blocks = free
        .layout
        .iter()
        .enumerate()
        .map(|(w, basis)| {
            let cols: Vec<Vec<u32>> = basis
                .iter()
                .map(|&(g, p)| acts[p].mul_vec(&images[g]).expect("image at path start"))
                .collect();
            Mat::from_columns(f, target.dims()[w], &cols)
        })
        .collect();
    Ok(ModuleMap::from_parts(free.module.clone(), target.clone(), blocks))
}

/// A projective cover `P -> M` whose generators lift a basis of the top of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveCover {
    free: FreeModule,
    surjection: ModuleMap,
}

impl ProjectiveCover {
    pub fn free(&self) -> &FreeModule {
        &self.free
    }

    pub fn module(&self) -> &QuiverModule {
        self.free.module()
    }

    pub fn surjection(&self) -> &ModuleMap {
        &self.surjection
    }

    /// `m_v`: multiplicity of `P_{v+1}` in the cover.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.free.multiplicities()
    }
}

/// Generators are chosen vertex by vertex as the standard basis vectors that
/// complete a basis of the radical, so the choice is deterministic.
pub fn projective_cover(m: &QuiverModule) -> ProjectiveCover {
    let f = m.field();
    let mut generators = Vec::new();
    let mut images = Vec::new();
    for (w, rad) in m.radical_basis().iter().enumerate() {
        let d = m.dims()[w];
        let pivots = rad.hstack(&Mat::identity(f, d)).expect("rows agree").rref().pivots;
        for pc in pivots.into_iter().filter(|&pc| pc >= rad.cols()) {
            let mut e = vec![0u32; d];
            e[pc - rad.cols()] = 1;
            generators.push(w);
            images.push(e);
        }
    }
    let free = free_module(m.algebra(), &generators);
    let surjection = map_from_free(&free, m, &images).expect("images live at generator vertices");
    ProjectiveCover { free, surjection }
}

/// A module is projective iff its projective cover is an isomorphism.
pub fn is_projective(m: &QuiverModule) -> bool {
    projective_cover(m).module().dim() == m.dim()
}
