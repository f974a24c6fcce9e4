//! Koszul objects, complexity, reduction towers and the vanishing analyzers.
//!
//! A Koszul step on `X` takes a map `η: Ω^d X -> X` and forms its cone in
//! the stable category as a pushout of modules:
//!
//! ```text
//!   0 -> Ω^d X --ι--> P_{d-1} -> Ω^{d-1} X -> 0
//!          |η           |
//!          v            v
//!   0 ->   X   ------>  C   ---> Ω^{d-1} X -> 0
//! ```
//!
//! When `η` is an isomorphism the cone is projective, i.e. zero in the
//! stable category, so one periodicity isomorphism takes a complexity-one
//! module down to complexity zero.

use serde::Serialize;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::homology::{detect_period_in, minimal_resolution, ExtTable, Resolution};
use crate::linalg::{FieldSpec, Mat};
use crate::rep::{cokernel, factor_through_cokernel, is_isomorphic, is_projective, simple, ModuleMap, QuiverModule};
use crate::SEED;

/// One cone construction `X -> C -> Ω^{d-1} X`.
#[derive(Debug, Clone)]
pub struct KoszulStep {
    degree: usize,
    eta: ModuleMap,
    cone: QuiverModule,
    inclusion: ModuleMap,
    projection: ModuleMap,
}

impl KoszulStep {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source(&self) -> &QuiverModule {
        self.eta.target()
    }

    pub fn eta(&self) -> &ModuleMap {
        &self.eta
    }

    pub fn cone(&self) -> &QuiverModule {
        &self.cone
    }

    /// `X -> C`.
    pub fn inclusion(&self) -> &ModuleMap {
        &self.inclusion
    }

    /// `C -> Ω^{d-1} X`.
    pub fn projection(&self) -> &ModuleMap {
        &self.projection
    }

    /// `0 -> X -> C -> Ω^{d-1} X -> 0` is exact at every vertex.
    pub fn is_exact(&self) -> bool {
        self.inclusion.is_injective()
            && self.projection.is_surjective()
            && self.inclusion.then(&self.projection).map(|c| c.is_zero()).unwrap_or(false)
            && (0..self.cone.dims().len()).all(|v| {
                self.cone.dims()[v] == self.inclusion.source().dims()[v] + self.projection.target().dims()[v]
            })
    }

    pub fn cone_is_projective(&self) -> bool {
        is_projective(&self.cone)
    }
}

/// Cone of `η: Ω^d X -> X`, with `Ω^d X` and `P_{d-1}` taken from `res`.
pub fn koszul_object(res: &Resolution, eta: &ModuleMap, degree: usize) -> Result<KoszulStep> {
    if degree == 0 || degree > res.max_degree() + 1 {
        return Err(Error::InvalidParameter(format!(
            "degree {degree} outside 1..={}",
            res.max_degree() + 1
        )));
    }
    if eta.source() != res.syzygy(degree) || eta.target() != res.module() {
        return Err(Error::SourceMismatch(format!(
            "η must map the stored Ω^{degree}(X) to X"
        )));
    }
    let x = res.module();
    let iota = res.inclusion(degree);
    let term = res.term(degree - 1);
    let sum = term.module().direct_sum(x)?;
    let f = x.field();
    let minus = f.neg(1);

    // (ι, -η): Ω^d X -> P_{d-1} ⊕ X
    let blocks = (0..x.dims().len())
        .map(|v| iota.block(v).vstack(&eta.block(v).scale(minus)))
        .collect::<Result<Vec<_>>>()?;
    let glue = ModuleMap::new(eta.source().clone(), sum.clone(), blocks)?;
    let (cone, quotient) = cokernel(&glue);

    let into_sum = (0..x.dims().len())
        .map(|v| {
            Mat::zeros(f, term.module().dims()[v], x.dims()[v]).vstack(&Mat::identity(f, x.dims()[v]))
        })
        .collect::<Result<Vec<_>>>()?;
    let inclusion = ModuleMap::new(x.clone(), sum.clone(), into_sum)?.then(&quotient)?;

    let pi = term.surjection();
    let out_of_sum = (0..x.dims().len())
        .map(|v| pi.block(v).hstack(&Mat::zeros(f, pi.target().dims()[v], x.dims()[v])))
        .collect::<Result<Vec<_>>>()?;
    let onto = ModuleMap::new(sum, pi.target().clone(), out_of_sum)?;
    let projection = factor_through_cokernel(&quotient, &onto)?;

    let step = KoszulStep { degree, eta: eta.clone(), cone, inclusion, projection };
    if !step.is_exact() {
        return Err(Error::Internal("cone sequence is not exact".into()));
    }
    Ok(step)
}

/// Growth class of the Betti sizes of a minimal resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "class")]
pub enum Complexity {
    /// Finite projective dimension inside the window.
    Zero,
    /// Eventually nonzero and bounded.
    One,
    /// Polynomial growth of the given degree, fitted from finite differences.
    Higher { degree: usize, heuristic: bool },
}

impl Complexity {
    pub fn value(self) -> usize {
        match self {
            Complexity::Zero => 0,
            Complexity::One => 1,
            Complexity::Higher { degree, .. } => degree,
        }
    }
}

/// Shortest window that sees a full syzygy cycle: twice the algebra dimension,
/// which is `2t(n+1)` for the circular Nakayama algebras.
pub fn min_complexity_window(algebra: &BoundQuiverAlgebra) -> usize {
    2 * algebra.dim()
}

const MAX_FITTED_DEGREE: usize = 8;

/// Classifies a Betti-size sequence `b_0, ..., b_B`.
///
/// Growth of order `d^{c-1}` means the `(c-1)`-th differences stop growing, so
/// `c` is one more than the first difference order whose second-half maximum
/// does not exceed its first-half maximum.
pub fn complexity_from_sizes(sizes: &[usize]) -> Complexity {
    if sizes.last().is_none_or(|&b| b == 0) {
        return Complexity::Zero;
    }
    let mut seq: Vec<i64> = sizes.iter().map(|&b| b as i64).collect();
    for order in 0..=MAX_FITTED_DEGREE {
        if seq.len() < 2 {
            break;
        }
        let half = seq.len() / 2;
        let early = seq[..half].iter().map(|x| x.abs()).max().unwrap_or(0);
        let late = seq[half..].iter().map(|x| x.abs()).max().unwrap_or(0);
        if late <= early {
            return if order == 0 {
                Complexity::One
            } else {
                Complexity::Higher { degree: order + 1, heuristic: true }
            };
        }
        seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
    }
    Complexity::Higher { degree: MAX_FITTED_DEGREE + 2, heuristic: true }
}

pub fn complexity_estimate(m: &QuiverModule, max_degree: usize) -> Result<Complexity> {
    let need = min_complexity_window(m.algebra());
    if max_degree < need {
        return Err(Error::InvalidParameter(format!(
            "complexity window {max_degree} is below the minimum {need}"
        )));
    }
    Ok(complexity_from_sizes(&minimal_resolution(m, max_degree).betti_sizes()))
}

/// A chain of Koszul steps whose stage complexities drop by one each time,
/// ending at a projective cone.
#[derive(Debug, Clone)]
pub struct ReductionTower {
    base: QuiverModule,
    steps: Vec<KoszulStep>,
    complexities: Vec<Complexity>,
}

impl ReductionTower {
    pub fn base(&self) -> &QuiverModule {
        &self.base
    }

    pub fn steps(&self) -> &[KoszulStep] {
        &self.steps
    }

    pub fn complexities(&self) -> &[Complexity] {
        &self.complexities
    }

    /// A projective base needs no steps.
    pub fn is_trivial(&self) -> bool {
        self.steps.is_empty()
    }

    /// `Σ d_j - c + 1`: the run of consecutive vanishing degrees that forces
    /// total vanishing.
    pub fn gap_length(&self) -> usize {
        self.steps.iter().map(|s| s.degree).sum::<usize>() + 1 - self.steps.len()
    }

    pub fn step_degrees(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.degree).collect()
    }
}

/// One-step tower built from the periodicity isomorphism `Ω^p M ≅ M`, if a
/// period `p <= window` exists. `res` must reach the minimum complexity window.
pub fn build_periodicity_tower_in(res: &Resolution, window: usize) -> Result<Option<ReductionTower>> {
    let m = res.module();
    let need = min_complexity_window(m.algebra());
    if res.max_degree() < need.max(window) {
        return Err(Error::InvalidParameter(format!(
            "tower needs a resolution through degree {}",
            need.max(window)
        )));
    }
    if is_projective(m) {
        return Ok(Some(ReductionTower { base: m.clone(), steps: Vec::new(), complexities: vec![Complexity::Zero] }));
    }
    let Some(witness) = detect_period_in(res, window)? else {
        return Ok(None);
    };
    let step = koszul_object(res, &witness.iso, witness.period)?;
    let base_cx = complexity_from_sizes(&res.betti_sizes());
    let cone_cx = complexity_estimate(step.cone(), need)?;
    if base_cx.value() != cone_cx.value() + 1 || !step.cone_is_projective() {
        return Err(Error::Internal(format!(
            "periodicity cone did not reduce complexity ({} -> {})",
            base_cx.value(),
            cone_cx.value()
        )));
    }
    Ok(Some(ReductionTower { base: m.clone(), steps: vec![step], complexities: vec![base_cx, cone_cx] }))
}

pub fn build_periodicity_tower(m: &QuiverModule, window: usize) -> Result<Option<ReductionTower>> {
    let depth = min_complexity_window(m.algebra()).max(window);
    build_periodicity_tower_in(&minimal_resolution(m, depth), window)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapVerdict {
    NoGap,
    GapImpliesAllZeroVerified,
    /// A qualifying gap followed by a nonzero entry. Falsifies the engine.
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub max_degree: usize,
    pub dims: Vec<usize>,
    pub step_degrees: Vec<usize>,
    pub gap_length: usize,
    pub gap_start: Option<usize>,
    pub verdict: GapVerdict,
}

impl GapReport {
    pub fn labelled(mut self, source: &str, target: &str) -> Self {
        self.source = Some(source.to_string());
        self.target = Some(target.to_string());
        self
    }
}

/// First run of `gap_length` consecutive zeros in `dims` (1-based start).
fn find_gap(dims: &[usize], gap_length: usize) -> Option<usize> {
    if gap_length == 0 || gap_length > dims.len() {
        return None;
    }
    dims.windows(gap_length).position(|w| w.iter().all(|&d| d == 0)).map(|k| k + 1)
}

/// Looks for a vanishing run long enough for the tower and checks that it
/// forces vanishing in every positive degree of the table.
pub fn gap_check(table: &ExtTable, tower: &ReductionTower) -> Result<GapReport> {
    if table.source() != tower.base() {
        return Err(Error::SourceMismatch("Ext table and tower are about different modules".into()));
    }
    let gap_length = tower.gap_length();
    let gap_start = find_gap(table.dims(), gap_length);
    let verdict = match gap_start {
        None => GapVerdict::NoGap,
        Some(_) if table.is_zero() => GapVerdict::GapImpliesAllZeroVerified,
        Some(_) => GapVerdict::Violation,
    };
    Ok(GapReport {
        source: None,
        target: None,
        max_degree: table.max_degree(),
        dims: table.dims().to_vec(),
        step_degrees: tower.step_degrees(),
        gap_length,
        gap_start,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryClass {
    BothTailsVanish,
    NeitherVanishes,
    Asymmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// `Ext^*(M, N)` vanishes in the tail.
    SourceToTarget,
    /// `Ext^*(N, M)` vanishes in the tail.
    TargetToSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub max_degree: usize,
    pub tail: usize,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
    pub classification: SymmetryClass,
    pub vanishing_direction: Option<Direction>,
    /// Tail degrees where a non-vanishing direction is nonzero.
    pub witness_degrees: Vec<usize>,
}

impl SymmetryReport {
    pub fn labelled(mut self, source: &str, target: &str) -> Self {
        self.source = Some(source.to_string());
        self.target = Some(target.to_string());
        self
    }
}

/// Classifies tail vanishing from a pair of tables `Ext(M,N)`, `Ext(N,M)`.
pub fn classify_symmetry(forward: &ExtTable, backward: &ExtTable, tail: usize) -> Result<SymmetryReport> {
    let bound = forward.max_degree();
    if backward.max_degree() != bound {
        return Err(Error::DimensionMismatch("tables must share their degree bound".into()));
    }
    if tail == 0 || tail > bound {
        return Err(Error::InvalidParameter(format!("tail {tail} outside 1..={bound}")));
    }
    let from = bound - tail + 1;
    let tail_zero = |t: &ExtTable| (from..=bound).all(|i| t.get(i) == 0);
    let (fz, bz) = (tail_zero(forward), tail_zero(backward));
    let (classification, vanishing_direction) = match (fz, bz) {
        (true, true) => (SymmetryClass::BothTailsVanish, None),
        (false, false) => (SymmetryClass::NeitherVanishes, None),
        (true, false) => (SymmetryClass::Asymmetric, Some(Direction::SourceToTarget)),
        (false, true) => (SymmetryClass::Asymmetric, Some(Direction::TargetToSource)),
    };
    let witness_degrees = (from..=bound)
        .filter(|&i| (!fz && forward.get(i) != 0) || (!bz && backward.get(i) != 0))
        .collect();
    Ok(SymmetryReport {
        source: None,
        target: None,
        max_degree: bound,
        tail,
        forward: forward.dims().to_vec(),
        backward: backward.dims().to_vec(),
        classification,
        vanishing_direction,
        witness_degrees,
    })
}

/// Compares tail vanishing of `Ext^*(M, N)` and `Ext^*(N, M)` on degrees
/// `max_degree - tail + 1 ..= max_degree`. An asymmetric outcome over a
/// symmetric Nakayama algebra is escalated to [`Error::Falsified`].
pub fn symmetry_scan(m: &QuiverModule, n: &QuiverModule, max_degree: usize, tail: usize) -> Result<SymmetryReport> {
    m.ensure_same_algebra(n)?;
    let forward = minimal_resolution(m, max_degree + 1).ext_table(n, max_degree)?;
    let backward = minimal_resolution(n, max_degree + 1).ext_table(m, max_degree)?;
    let report = classify_symmetry(&forward, &backward, tail)?;
    if report.classification == SymmetryClass::Asymmetric
        && m.algebra().nakayama().is_some_and(|p| p.is_symmetric())
    {
        return Err(Error::Falsified("asymmetric Ext vanishing over a symmetric algebra".into()));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuslanderEntry {
    pub target: String,
    pub tail_vanishes: bool,
    pub all_vanish: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuslanderReport {
    pub max_degree: usize,
    pub head: usize,
    pub entries: Vec<AuslanderEntry>,
    pub violations: usize,
    /// `Some(1)` when every eventually-vanishing target vanishes in all positive degrees.
    pub d_m: Option<usize>,
}

/// For each `N` whose Ext against `M` vanishes on the last `head` degrees,
/// checks vanishing on all of `1..=max_degree`.
pub fn auslander_scan(
    m: &QuiverModule,
    corpus: &[(String, QuiverModule)],
    max_degree: usize,
    head: usize,
) -> Result<AuslanderReport> {
    if head == 0 || head > max_degree {
        return Err(Error::InvalidParameter(format!("head {head} outside 1..={max_degree}")));
    }
    let res = minimal_resolution(m, max_degree + 1);
    let from = max_degree - head + 1;
    let mut entries = Vec::with_capacity(corpus.len());
    for (label, n) in corpus {
        let table = res.ext_table(n, max_degree)?;
        let tail_vanishes = (from..=max_degree).all(|i| table.get(i) == 0);
        entries.push(AuslanderEntry { target: label.clone(), tail_vanishes, all_vanish: table.is_zero() });
    }
    let violations = entries.iter().filter(|e| e.tail_vanishes && !e.all_vanish).count();
    Ok(AuslanderReport { max_degree, head, entries, violations, d_m: (violations == 0).then_some(1) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyzygyFormulaCheck {
    /// `Ω²(S_i) ≅ S_{i+1+r}` for every vertex.
    pub omega2_verified: bool,
    /// `Ω^{2j}(S_i) ≅ S_{i+j+jr}` for `1 <= j <= checked_j`.
    pub even_syzygies_verified: bool,
    pub checked_j: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerSummary {
    pub module: usize,
    pub period: Option<usize>,
    pub gap_length: Option<usize>,
    pub complexities: Vec<usize>,
    pub cone_projective: bool,
    pub cone_exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub source: usize,
    pub target: usize,
    pub ext: Vec<usize>,
    pub gap_length: usize,
    pub gap_start: Option<usize>,
    pub verdict: GapVerdict,
    pub classification: SymmetryClass,
    pub vanishing_direction: Option<Direction>,
    pub witness_degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    /// `t >= 3` and `r = t - 1`.
    pub required: bool,
    /// `Ext^odd(S_1, S_2) != 0` and `Ext^*(S_2, S_1) = 0` on `1..=max_degree`.
    pub confirmed: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NakayamaReport {
    pub t: usize,
    pub n: usize,
    pub q: usize,
    pub r: usize,
    pub field_p: u32,
    pub max_degree: usize,
    pub tail: usize,
    pub seed: u64,
    pub symmetric: bool,
    pub syzygy_formula: SyzygyFormulaCheck,
    pub towers: Vec<TowerSummary>,
    pub pairs: Vec<PairReport>,
    /// Unordered pairs of simples with asymmetric tail vanishing.
    pub asymmetric_pairs: usize,
    pub witness: WitnessCheck,
    /// Anything here falsifies the engine.
    pub violations: Vec<String>,
}

/// 1-based index of `S_{i + shift}` with indices taken mod `t`.
fn shifted(i: usize, shift: usize, t: usize) -> usize {
    (i - 1 + shift) % t + 1
}

/// Full simple-module analysis of `kΓ/J^{n+1}` on degrees `1..=max_degree`.
///
/// `tail` defaults to `min(2t, max_degree)`, long enough to cover one full
/// period of every simple.
pub fn nakayama_report(
    t: usize,
    n: usize,
    max_degree: usize,
    field: FieldSpec,
    tail: Option<usize>,
) -> Result<NakayamaReport> {
    let algebra = crate::algebra::nakayama_algebra(t, n, field)?;
    let params = algebra.nakayama().expect("circular Nakayama");
    let r = params.r;
    if max_degree < 2 {
        return Err(Error::InvalidParameter("max_degree must be at least 2".into()));
    }
    let tail = tail.unwrap_or((2 * t).min(max_degree));
    if tail == 0 || tail > max_degree {
        return Err(Error::InvalidParameter(format!("tail {tail} outside 1..={max_degree}")));
    }
    let window = 2 * t;
    let depth = (max_degree + 1).max(min_complexity_window(&algebra)).max(window);

    let simples: Vec<QuiverModule> = (1..=t).map(|i| simple(&algebra, i)).collect::<Result<_>>()?;
    let resolutions: Vec<Resolution> = simples.iter().map(|s| minimal_resolution(s, depth)).collect();
    let mut violations = Vec::new();

    let mut omega2_verified = true;
    let mut even_syzygies_verified = true;
    let checked_j = max_degree / 2;
    for i in 1..=t {
        let res = &resolutions[i - 1];
        if !is_isomorphic(res.syzygy(2), &simples[shifted(i, 1 + r, t) - 1])?.is_isomorphic() {
            omega2_verified = false;
            violations.push(format!("Ω²(S_{i}) is not S_{}", shifted(i, 1 + r, t)));
        }
        for j in 1..=checked_j {
            let expected = shifted(i, j * (1 + r), t);
            if !is_isomorphic(res.syzygy(2 * j), &simples[expected - 1])?.is_isomorphic() {
                even_syzygies_verified = false;
                violations.push(format!("Ω^{}(S_{i}) is not S_{expected}", 2 * j));
            }
        }
    }

    let mut towers = Vec::with_capacity(t);
    let mut tower_objs = Vec::with_capacity(t);
    for (i, res) in resolutions.iter().enumerate() {
        let tower = build_periodicity_tower_in(res, window)?;
        let summary = match &tower {
            Some(tw) => TowerSummary {
                module: i + 1,
                period: tw.steps().first().map(|s| s.degree()),
                gap_length: Some(tw.gap_length()),
                complexities: tw.complexities().iter().map(|c| c.value()).collect(),
                cone_projective: tw.steps().iter().all(KoszulStep::cone_is_projective),
                cone_exact: tw.steps().iter().all(KoszulStep::is_exact),
            },
            None => {
                violations.push(format!("S_{} has no period within {window}", i + 1));
                TowerSummary {
                    module: i + 1,
                    period: None,
                    gap_length: None,
                    complexities: Vec::new(),
                    cone_projective: false,
                    cone_exact: false,
                }
            }
        };
        towers.push(summary);
        tower_objs.push(tower);
    }

    let tables: Vec<Vec<ExtTable>> = resolutions
        .iter()
        .map(|res| simples.iter().map(|s| res.ext_table(s, max_degree)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let mut pairs = Vec::with_capacity(t * t);
    let mut asymmetric_pairs = 0;
    for i in 1..=t {
        for j in 1..=t {
            let table = &tables[i - 1][j - 1];
            let sym = classify_symmetry(table, &tables[j - 1][i - 1], tail)?;
            let (gap_length, gap_start, verdict) = match &tower_objs[i - 1] {
                Some(tw) => {
                    let g = gap_check(table, tw)?;
                    (g.gap_length, g.gap_start, g.verdict)
                }
                None => (0, None, GapVerdict::NoGap),
            };
            if verdict == GapVerdict::Violation {
                violations.push(format!("gap violation for (S_{i}, S_{j})"));
            }
            if sym.classification == SymmetryClass::Asymmetric {
                if i < j {
                    asymmetric_pairs += 1;
                }
                if params.is_symmetric() {
                    violations.push(format!("asymmetric pair (S_{i}, S_{j}) over a symmetric algebra"));
                }
            }
            pairs.push(PairReport {
                source: i,
                target: j,
                ext: table.dims().to_vec(),
                gap_length,
                gap_start,
                verdict,
                classification: sym.classification,
                vanishing_direction: sym.vanishing_direction,
                witness_degrees: sym.witness_degrees,
            });
        }
    }

    let required = t >= 3 && r == t - 1;
    let confirmed = required.then(|| {
        let forward = &tables[0][1];
        let backward = &tables[1][0];
        (1..=max_degree).step_by(2).all(|i| forward.get(i) != 0) && backward.is_zero()
    });
    if confirmed == Some(false) {
        violations.push("(S_1, S_2) asymmetry witness not observed".into());
    }

    Ok(NakayamaReport {
        t,
        n,
        q: params.q,
        r,
        field_p: field.characteristic(),
        max_degree,
        tail,
        seed: SEED,
        symmetric: params.is_symmetric(),
        syzygy_formula: SyzygyFormulaCheck { omega2_verified, even_syzygies_verified, checked_j },
        towers,
        pairs,
        asymmetric_pairs,
        witness: WitnessCheck { required, confirmed },
        violations,
    })
}
