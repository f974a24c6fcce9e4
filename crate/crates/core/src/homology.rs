//! Syzygies, minimal projective resolutions and Ext.
//!
//! `Ext^i(M, N)` is the cohomology of `Hom(P_•, N)`. Since
//! `Hom(P_v, N) ≅ N_v`, every cochain group is a direct sum of vertex spaces
//! of `N` and the cochain differentials are assembled from path actions on
//! `N`; no Hom system is ever solved for Ext.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rep::{
    find_isomorphism, hom_basis, is_isomorphic, kernel, lift_through_injection, map_from_free,
    projective_cover, IsoDecision, ModuleMap, ProjectiveCover, QuiverModule,
};

/// Default degree bound for Ext tables and scans.
pub const DEFAULT_MAX_DEGREE: usize = 40;

/// `Ω(M)`: the kernel of the projective cover. `Ω(P) = 0` for projective `P`.
pub fn syzygy(m: &QuiverModule) -> QuiverModule {
    kernel(projective_cover(m).surjection()).0
}

/// `Ω^k(M)`.
pub fn syzygy_power(m: &QuiverModule, k: usize) -> QuiverModule {
    (0..k).fold(m.clone(), |acc, _| syzygy(&acc))
}

/// Minimal projective resolution `P_B -> ... -> P_0 -> M -> 0`.
#[derive(Debug, Clone)]
pub struct Resolution {
    module: QuiverModule,
    max_degree: usize,
    // covers[d]: P_d -> Ω^d M
    covers: Vec<ProjectiveCover>,
    // syzygies[d] = Ω^d M, for d in 0..=max_degree + 1
    syzygies: Vec<QuiverModule>,
    // inclusions[d]: Ω^{d+1} M -> P_d
    inclusions: Vec<ModuleMap>,
}

pub fn minimal_resolution(m: &QuiverModule, max_degree: usize) -> Resolution {
    let mut covers = Vec::with_capacity(max_degree + 1);
    let mut syzygies = vec![m.clone()];
    let mut inclusions = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let cover = projective_cover(&syzygies[d]);
        let (next, incl) = kernel(cover.surjection());
        covers.push(cover);
        syzygies.push(next);
        inclusions.push(incl);
    }
    Resolution { module: m.clone(), max_degree, covers, syzygies, inclusions }
}

impl Resolution {
    pub fn module(&self) -> &QuiverModule {
        &self.module
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// The degree-`d` term `P_d -> Ω^d M`.
    pub fn term(&self, d: usize) -> &ProjectiveCover {
        &self.covers[d]
    }

    /// `Ω^d M` for `0 <= d <= max_degree + 1`.
    pub fn syzygy(&self, d: usize) -> &QuiverModule {
        &self.syzygies[d]
    }

    /// The inclusion `Ω^d M -> P_{d-1}` for `1 <= d <= max_degree + 1`.
    pub fn inclusion(&self, d: usize) -> &ModuleMap {
        &self.inclusions[d - 1]
    }

    /// Multiplicity of `P_{v+1}` in degree `d`.
    pub fn betti(&self, d: usize) -> Vec<usize> {
        self.covers[d].multiplicities()
    }

    /// Number of indecomposable summands of `P_d`, for every degree.
    pub fn betti_sizes(&self) -> Vec<usize> {
        self.covers.iter().map(|c| c.free().generators().len()).collect()
    }

    /// 1-based projective index of each summand of `P_d`.
    pub fn projective_indices(&self, d: usize) -> Vec<usize> {
        self.covers[d].free().labels()
    }

    /// `∂_d: P_d -> P_{d-1}` for `1 <= d <= max_degree`.
    pub fn differential(&self, d: usize) -> ModuleMap {
        self.covers[d].surjection().then(&self.inclusions[d - 1]).expect("composable by construction")
    }

    /// Coordinates of `∂_d(g)` in the path basis of `P_{d-1}`, for each
    /// generator `g` of `P_d`.
    fn generator_images(&self, d: usize) -> Vec<Vec<u32>> {
        let diff = self.differential(d);
        let free = self.covers[d].free();
        free.generators()
            .iter()
            .enumerate()
            .map(|(g, &v)| {
                // the trivial path at v has basis index v
                let col = free.position(g, v).expect("generator basis element");
                diff.block(v).column(col)
            })
            .collect()
    }

    /// Every differential induces zero on tops: no generator of `P_d` maps
    /// onto a generator of `P_{d-1}` with nonzero coefficient.
    pub fn is_minimal(&self) -> bool {
        (1..=self.max_degree).all(|d| {
            let lower = self.covers[d - 1].free();
            let upper = self.covers[d].free();
            let images = self.generator_images(d);
            upper.generators().iter().zip(&images).all(|(&w, img)| {
                lower
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| v == w)
                    .all(|(g, &v)| img[lower.position(g, v).expect("top element")] == 0)
            })
        })
    }

    /// `im ∂_{d+1} = ker ∂_d` for every stored degree, and `P_0 -> M` onto.
    pub fn is_exact(&self) -> bool {
        if !self.covers[0].surjection().is_surjective() {
            return false;
        }
        (1..=self.max_degree).all(|d| {
            let diff = self.differential(d);
            let below =
                if d == 1 { self.covers[0].surjection().clone() } else { self.differential(d - 1) };
            let composite_vanishes = diff.then(&below).map(|c| c.is_zero()).unwrap_or(false);
            composite_vanishes
                && (0..diff.target().dims().len()).all(|v| {
                    diff.block(v).rank() + below.block(v).rank() == diff.target().dims()[v]
                })
        })
    }

    /// `δ: Hom(P_{d-1}, N) -> Hom(P_d, N)` in the vertex-space coordinates.
    fn hom_coboundary(&self, d: usize, n: &QuiverModule, acts: &[Mat]) -> Mat {
        let upper = self.covers[d].free();
        let lower = self.covers[d - 1].free();
        let col_offsets = offsets(lower.generators(), n);
        let row_offsets = offsets(upper.generators(), n);
        let rows = row_offsets.last().copied().unwrap_or(0);
        let cols = col_offsets.last().copied().unwrap_or(0);
        let mut delta = Mat::zeros(n.field(), rows, cols);
        let f = n.field();
        for (gp, (&w, img)) in upper.generators().iter().zip(self.generator_images(d)).enumerate() {
            for (pos, &(g, path)) in lower.layout(w).iter().enumerate() {
                let c = img[pos];
                if c != 0 {
                    delta.add_block(row_offsets[gp], col_offsets[g], &acts[path].scale(c % f.characteristic()));
                }
            }
        }
        delta
    }

    /// `dim Ext^i(M, N)` for `1 <= i <= max_degree - 1` via `Hom(P_•, N)`.
    pub fn ext_dim(&self, n: &QuiverModule, i: usize) -> Result<usize> {
        self.module.ensure_same_algebra(n)?;
        if i == 0 {
            return Err(Error::InvalidParameter("degree 0 is Hom; use hom_basis".into()));
        }
        if i + 1 > self.max_degree {
            return Err(Error::InvalidParameter(format!(
                "Ext^{i} needs a resolution through degree {}, have {}",
                i + 1,
                self.max_degree
            )));
        }
        let acts = n.path_actions();
        Ok(self.ext_dim_with(n, &acts, i))
    }

    fn ext_dim_with(&self, n: &QuiverModule, acts: &[Mat], i: usize) -> usize {
        let cochains: usize = self.covers[i].free().generators().iter().map(|&v| n.dims()[v]).sum();
        let into = self.hom_coboundary(i, n, acts).rank();
        let out = self.hom_coboundary(i + 1, n, acts).rank();
        cochains - out - into
    }

    /// `dim Ext^i(M, S_j)` read off the Betti numbers: with a minimal
    /// resolution the complex `Hom(P_•, S_j)` has zero differentials.
    pub fn ext_dim_simple_by_betti(&self, vertex: usize, i: usize) -> Result<usize> {
        let v = self.module.algebra().vertex(vertex)?;
        if i == 0 || i > self.max_degree {
            return Err(Error::InvalidParameter(format!("degree {i} outside 1..={}", self.max_degree)));
        }
        Ok(self.betti(i)[v])
    }

    /// `dim Ext^i(M, N)` for `i = 1..=bound`; needs `bound < max_degree`.
    pub fn ext_table(&self, n: &QuiverModule, bound: usize) -> Result<ExtTable> {
        self.module.ensure_same_algebra(n)?;
        if bound + 1 > self.max_degree {
            return Err(Error::InvalidParameter(format!(
                "Ext table through degree {bound} needs a resolution through degree {}",
                bound + 1
            )));
        }
        let acts = n.path_actions();
        let ranks: Vec<usize> = (1..=bound + 1).map(|d| self.hom_coboundary(d, n, &acts).rank()).collect();
        let dims = (1..=bound)
            .map(|i| {
                let cochains: usize =
                    self.covers[i].free().generators().iter().map(|&v| n.dims()[v]).sum();
                cochains - ranks[i] - ranks[i - 1]
            })
            .collect();
        Ok(ExtTable { source: self.module.clone(), target: n.clone(), max_degree: bound, dims })
    }
}

fn offsets(generators: &[usize], n: &QuiverModule) -> Vec<usize> {
    let mut acc = vec![0];
    for &v in generators {
        acc.push(acc.last().unwrap() + n.dims()[v]);
    }
    acc
}

/// `dim Ext^i(M, N)` for degrees `1..=max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtTable {
    source: QuiverModule,
    target: QuiverModule,
    max_degree: usize,
    dims: Vec<usize>,
}

impl ExtTable {
    pub fn source(&self) -> &QuiverModule {
        &self.source
    }

    pub fn target(&self) -> &QuiverModule {
        &self.target
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Entry `k` is `dim Ext^{k+1}`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn get(&self, degree: usize) -> usize {
        self.dims[degree - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `degree,dim` with one row per degree and LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dim\n");
        for (k, d) in self.dims.iter().enumerate() {
            writeln!(out, "{},{}", k + 1, d).unwrap();
        }
        out
    }
}

/// `Ext^i(M, N)` for a single degree `i >= 1`.
pub fn ext_dim(m: &QuiverModule, n: &QuiverModule, i: usize) -> Result<usize> {
    if i == 0 {
        return Err(Error::InvalidParameter("degree 0 is Hom; use hom_basis".into()));
    }
    minimal_resolution(m, i + 1).ext_dim(n, i)
}

pub fn ext_table(m: &QuiverModule, n: &QuiverModule, max_degree: usize) -> Result<ExtTable> {
    minimal_resolution(m, max_degree + 1).ext_table(n, max_degree)
}

/// `Ω(f): Ω(M) -> Ω(N)`, obtained by lifting `f ∘ π_M` through `π_N` and
/// restricting to kernels. Defined up to maps factoring through projectives.
pub fn omega_map(f: &ModuleMap) -> Result<ModuleMap> {
    let cover_m = projective_cover(f.source());
    let cover_n = projective_cover(f.target());
    let pi_m = cover_m.surjection();
    let pi_n = cover_n.surjection();
    let images = cover_m
        .free()
        .generators()
        .iter()
        .enumerate()
        .map(|(g, &v)| {
            let col = cover_m.free().position(g, v).expect("generator basis element");
            let y = f.block(v).mul_vec(&pi_m.block(v).column(col))?;
            pi_n.block(v)
                .solve(&y)?
                .ok_or_else(|| Error::Internal("projective cover does not lift".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let lift = map_from_free(cover_m.free(), cover_n.module(), &images)?;
    let (_, incl_m) = kernel(pi_m);
    let (_, incl_n) = kernel(pi_n);
    lift_through_injection(&incl_n, &incl_m.then(&lift)?)
}

fn span_rank(maps: &[ModuleMap]) -> Option<usize> {
    let first = maps.first()?;
    let cols: Vec<Vec<u32>> = maps.iter().map(ModuleMap::flatten).collect();
    Some(Mat::from_columns(first.source().field(), cols[0].len(), &cols).rank())
}

/// Maps `M -> P(N) -> N` composed with the projective cover of `N`.
fn projective_factorizations(m: &QuiverModule, n: &QuiverModule) -> Result<Vec<ModuleMap>> {
    let cover = projective_cover(n);
    hom_basis(m, cover.module())?
        .iter()
        .map(|h| h.then(cover.surjection()))
        .collect()
}

fn require_selfinjective(m: &QuiverModule) -> Result<()> {
    if m.algebra().is_selfinjective() {
        Ok(())
    } else {
        Err(Error::Unsupported("stable Hom needs a selfinjective algebra".into()))
    }
}

/// `dim` of the stable Hom space: `Hom(M, N)` modulo maps factoring through
/// a projective, i.e. through the projective cover of `N`.
pub fn stable_hom_dim(m: &QuiverModule, n: &QuiverModule) -> Result<usize> {
    m.ensure_same_algebra(n)?;
    require_selfinjective(m)?;
    let hom = hom_basis(m, n)?.len();
    let through = span_rank(&projective_factorizations(m, n)?).unwrap_or(0);
    Ok(hom - through)
}

/// Whether `f` factors through a projective module.
pub fn factors_through_projective(f: &ModuleMap) -> Result<bool> {
    require_selfinjective(f.source())?;
    let mut maps = projective_factorizations(f.source(), f.target())?;
    let base = span_rank(&maps).unwrap_or(0);
    maps.push(f.clone());
    Ok(span_rank(&maps).unwrap_or(0) == base)
}

/// `Ω^p(M) ≅ M`, witnessed by an explicit isomorphism.
#[derive(Debug, Clone)]
pub struct PeriodicityWitness {
    pub period: usize,
    /// `Ω^p(M) -> M`, with `Ω^p(M)` taken from the minimal resolution.
    pub iso: ModuleMap,
}

/// Smallest `p <= window` with `Ω^p(M) ≅ M`, searched along `res`.
///
/// The zero module and modules of finite projective dimension have no period.
pub fn detect_period_in(res: &Resolution, window: usize) -> Result<Option<PeriodicityWitness>> {
    let m = res.module();
    if m.is_zero() {
        return Ok(None);
    }
    let reach = window.min(res.max_degree() + 1);
    for p in 1..=reach {
        let omega = res.syzygy(p);
        if omega.is_zero() {
            return Ok(None);
        }
        match is_isomorphic(omega, m)? {
            IsoDecision::NotIsomorphic => continue,
            IsoDecision::Undecided => {
                return Err(Error::Undecided(format!("cannot decide whether Ω^{p}(M) ≅ M")));
            }
            IsoDecision::Isomorphic => {
                let iso = find_isomorphism(omega, m)?
                    .ok_or_else(|| Error::Internal("isomorphic modules without an isomorphism".into()))?;
                return Ok(Some(PeriodicityWitness { period: p, iso }));
            }
        }
    }
    Ok(None)
}

pub fn detect_period(m: &QuiverModule, window: usize) -> Result<Option<PeriodicityWitness>> {
    if window == 0 {
        return Err(Error::InvalidParameter("period window must be >= 1".into()));
    }
    detect_period_in(&minimal_resolution(m, window - 1), window)
}

/// Betti summary used in reports: `(degree, projective index, multiplicity)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub degree: usize,
    pub projective_index: usize,
    pub multiplicity: usize,
}

impl Resolution {
    pub fn betti_rows(&self) -> Vec<BettiRow> {
        (0..=self.max_degree)
            .flat_map(|d| {
                self.betti(d)
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, m)| m > 0)
                    .map(move |(v, m)| BettiRow { degree: d, projective_index: v + 1, multiplicity: m })
            })
            .collect()
    }
}
