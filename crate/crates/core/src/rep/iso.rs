use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{column_space, hom_basis, ModuleMap, QuiverModule};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::SEED;

/// One uniserial summand: its top vertex (1-based) and composition length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SerialSummand {
    pub top: usize,
    pub length: usize,
}

/// Krull–Schmidt decomposition of a module over a circular Nakayama algebra.
///
/// Every such module is a sum of uniserials. For a top vertex `j` and `k >= 0`
/// the unique path `p` of length `k` from `j` induces a map
/// `M_j / (JM)_j -> (J^k M)_{j+k} / (J^{k+1} M)_{j+k}` whose rank is the
/// number of summands with top `j` and length `> k`. Differencing those ranks
/// gives the multiplicities. The result is sorted.
pub fn decompose_serial(m: &QuiverModule) -> Result<Vec<SerialSummand>> {
    let alg = m.algebra();
    let Some(params) = alg.nakayama() else {
        return Err(Error::Unsupported("serial decomposition needs a circular Nakayama algebra".into()));
    };
    let quiver = alg.quiver();
    let t = params.t;
    let longest = params.n + 1;

    // layers[k][v]: column basis of (J^k M)_v
    let mut layers: Vec<Vec<Mat>> =
        vec![m.dims().iter().map(|&d| Mat::identity(m.field(), d)).collect()];
    for k in 0..longest {
        let next = (0..t)
            .map(|w| {
                let mut span = Mat::zeros(m.field(), m.dims()[w], 0);
                for a in quiver.arrows_into(w) {
                    let s = quiver.arrow(a).0;
                    let img = m.arrow_action(a).mul(&layers[k][s]).expect("shapes agree");
                    span = span.hstack(&img).expect("rows agree");
                }
                column_space(&span)
            })
            .collect();
        layers.push(next);
    }

    let acts = m.path_actions();
    let mut summands = Vec::new();
    for j in 0..t {
        let mut longer = Vec::with_capacity(longest + 1);
        for k in 0..longest {
            let idx = *alg
                .paths_from(j)
                .iter()
                .find(|&&i| alg.path(i).len() == k)
                .expect("one path of each length");
            let w = alg.path_end(idx);
            let deeper = &layers[k + 1][w];
            let joined = acts[idx].hstack(deeper).expect("rows agree");
            longer.push(joined.rank() - deeper.cols());
        }
        longer.push(0);
        for len in 1..=longest {
            let count = longer[len - 1] - longer[len];
            summands.extend((0..count).map(|_| SerialSummand { top: j + 1, length: len }));
        }
    }
    summands.sort();
    Ok(summands)
}

/// Outcome of an isomorphism test. `Undecided` is only produced by the
/// randomized fallback for algebras outside the Nakayama family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoDecision {
    Isomorphic,
    NotIsomorphic,
    Undecided,
}

impl IsoDecision {
    pub fn is_isomorphic(self) -> bool {
        self == IsoDecision::Isomorphic
    }
}

pub fn is_isomorphic(m: &QuiverModule, n: &QuiverModule) -> Result<IsoDecision> {
    m.ensure_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(IsoDecision::NotIsomorphic);
    }
    if m.algebra().nakayama().is_some() {
        return Ok(if decompose_serial(m)? == decompose_serial(n)? {
            IsoDecision::Isomorphic
        } else {
            IsoDecision::NotIsomorphic
        });
    }
    if m.top_dims() != n.top_dims() {
        return Ok(IsoDecision::NotIsomorphic);
    }
    match search_isomorphism(m, n)? {
        Search::Found(_) => Ok(IsoDecision::Isomorphic),
        Search::Excluded => Ok(IsoDecision::NotIsomorphic),
        Search::Exhausted => Ok(IsoDecision::Undecided),
    }
}

/// An explicit isomorphism `M -> N`, `None` if the modules are provably not
/// isomorphic, and [`Error::Undecided`] if the search ran out of candidates.
pub fn find_isomorphism(m: &QuiverModule, n: &QuiverModule) -> Result<Option<ModuleMap>> {
    m.ensure_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.algebra().nakayama().is_some() && decompose_serial(m)? != decompose_serial(n)? {
        return Ok(None);
    }
    match search_isomorphism(m, n)? {
        Search::Found(f) => Ok(Some(f)),
        Search::Excluded => Ok(None),
        Search::Exhausted => Err(Error::Undecided(format!(
            "no invertible map found between modules of dimension vector {:?}",
            m.dims()
        ))),
    }
}

enum Search {
    Found(ModuleMap),
    Excluded,
    Exhausted,
}

const RANDOM_TRIALS: usize = 64;

fn combine(basis: &[ModuleMap], coeffs: &[u32]) -> ModuleMap {
    let mut acc = basis[0].scale(coeffs[0]);
    for (b, &c) in basis.iter().zip(coeffs).skip(1) {
        if c != 0 {
            acc = acc.add(&b.scale(c)).expect("same ends");
        }
    }
    acc
}

fn search_isomorphism(m: &QuiverModule, n: &QuiverModule) -> Result<Search> {
    if m.is_zero() {
        return Ok(Search::Found(ModuleMap::identity(m)));
    }
    let forward = hom_basis(m, n)?;
    let backward = hom_basis(n, m)?;
    // both equal dim End(M) when M ≅ N
    if forward.len() != backward.len() || forward.is_empty() {
        return Ok(Search::Excluded);
    }
    if let Some(f) = forward.iter().find(|f| f.is_isomorphism()) {
        return Ok(Search::Found(f.clone()));
    }
    let h = forward.len();
    for i in 0..h {
        for j in i + 1..h {
            let f = forward[i].add(&forward[j])?;
            if f.is_isomorphism() {
                return Ok(Search::Found(f));
            }
            for k in j + 1..h {
                let g = f.add(&forward[k])?;
                if g.is_isomorphism() {
                    return Ok(Search::Found(g));
                }
            }
        }
    }
    let p = m.field().characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<u32> = (0..h).map(|_| rng.random_range(0..p)).collect();
        let f = combine(&forward, &coeffs);
        if f.is_isomorphism() {
            return Ok(Search::Found(f));
        }
    }
    Ok(Search::Exhausted)
}
