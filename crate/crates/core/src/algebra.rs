//! Quivers and monomially truncated path algebras.
//!
//! Vertices are numbered from 1 at every public entry point and in every
//! label; internally they are stored 0-based.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::FieldSpec;

/// A finite quiver. Arrow indices follow construction order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    // (source, target), 0-based
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Builds a quiver from 1-based `(source, target)` pairs.
    pub fn new(vertex_count: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter("a quiver needs at least one vertex".into()));
        }
        let mut stored = Vec::with_capacity(arrows.len());
        for &(s, t) in arrows {
            for v in [s, t] {
                if v == 0 || v > vertex_count {
                    return Err(Error::BadVertex { vertex: v, count: vertex_count });
                }
            }
            stored.push((s - 1, t - 1));
        }
        Ok(Quiver { vertex_count, arrows: stored })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// 0-based `(source, target)` of arrow `a`.
    pub fn arrow(&self, a: usize) -> (usize, usize) {
        self.arrows[a]
    }

    /// 1-based `(source, target)` pairs.
    pub fn arrows_labelled(&self) -> Vec<(usize, usize)> {
        self.arrows.iter().map(|&(s, t)| (s + 1, t + 1)).collect()
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, &(s, _))| s == v).map(|(a, _)| a)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, &(_, t))| t == v).map(|(a, _)| a)
    }

    fn is_circular(&self) -> bool {
        let t = self.vertex_count;
        t >= 2
            && self.arrows.len() == t
            && self.arrows.iter().enumerate().all(|(a, &(s, e))| s == a && e == (a + 1) % t)
    }
}

/// The circular quiver on `t` vertices with arrows `i -> i+1 (mod t)`.
pub fn circular_quiver(t: usize) -> Result<Quiver> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("circular quiver needs t >= 2, got {t}")));
    }
    let arrows: Vec<_> = (1..=t).map(|i| (i, i % t + 1)).collect();
    Quiver::new(t, &arrows)
}

/// A path: a start vertex and a composable arrow sequence. The empty sequence
/// is the idempotent `e_v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    start: usize,
    arrows: Vec<usize>,
}

impl PathWord {
    /// The trivial path at a 1-based vertex.
    pub fn trivial(quiver: &Quiver, vertex: usize) -> Result<Self> {
        if vertex == 0 || vertex > quiver.vertex_count {
            return Err(Error::BadVertex { vertex, count: quiver.vertex_count });
        }
        Ok(PathWord { start: vertex - 1, arrows: Vec::new() })
    }

    /// A path from a 1-based start vertex along 0-based arrow indices.
    pub fn new(quiver: &Quiver, start: usize, arrows: &[usize]) -> Result<Self> {
        let mut p = PathWord::trivial(quiver, start)?;
        for &a in arrows {
            if a >= quiver.arrow_count() {
                return Err(Error::InvalidParameter(format!("no arrow with index {a}")));
            }
            if quiver.arrow(a).0 != p.end(quiver) {
                return Err(Error::InvalidParameter(format!(
                    "arrow {a} does not compose after the path so far"
                )));
            }
            p.arrows.push(a);
        }
        Ok(p)
    }

    /// 0-based start vertex.
    pub fn start(&self) -> usize {
        self.start
    }

    /// 0-based end vertex.
    pub fn end(&self, quiver: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| quiver.arrow(a).1)
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    fn sort_key(&self) -> (usize, usize, &[usize]) {
        (self.arrows.len(), self.start, &self.arrows)
    }
}

/// Outcome of multiplying two basis paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Product {
    Path(PathWord),
    /// Composable, but the concatenation lies in the truncated ideal.
    Zero,
    NotComposable,
}

/// Parameters of the circular Nakayama algebra `kΓ/J^{n+1}`, with `n = q·t + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NakayamaParams {
    pub t: usize,
    pub n: usize,
    pub q: usize,
    pub r: usize,
}

impl NakayamaParams {
    /// `r = 0` is exactly the symmetric case of this family.
    pub fn is_symmetric(&self) -> bool {
        self.r == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    CircularNakayama(NakayamaParams),
    MonomialTruncation,
}

/// `kQ / J^L`: the path algebra modulo all paths of length at least `L`.
#[derive(Clone)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    nilpotency: usize,
    field: FieldSpec,
    kind: AlgebraKind,
    basis: Vec<PathWord>,
    index: HashMap<PathWord, usize>,
    ends: Vec<usize>,
    // extend[path][arrow]
    extend: Vec<Vec<Option<usize>>>,
    from_vertex: Vec<Vec<usize>>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.nilpotency == other.nilpotency
            && self.field == other.field
    }
}

impl Eq for BoundQuiverAlgebra {}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("kind", &self.kind)
            .field("vertices", &self.quiver.vertex_count)
            .field("arrows", &self.quiver.arrows_labelled())
            .field("nilpotency", &self.nilpotency)
            .field("p", &self.field.characteristic())
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl BoundQuiverAlgebra {
    /// The monomial truncation of `kQ` by all paths of length `>= nilpotency`.
    /// A circular quiver is recognised and tagged as a Nakayama algebra.
    pub fn truncated(quiver: Quiver, nilpotency: usize, field: FieldSpec) -> Result<Self> {
        if nilpotency < 1 {
            return Err(Error::InvalidParameter("nilpotency degree must be >= 1".into()));
        }
        let kind = if quiver.is_circular() && nilpotency >= 2 {
            let t = quiver.vertex_count;
            let n = nilpotency - 1;
            AlgebraKind::CircularNakayama(NakayamaParams { t, n, q: n / t, r: n % t })
        } else {
            AlgebraKind::MonomialTruncation
        };

        let mut basis: Vec<PathWord> = (0..quiver.vertex_count)
            .map(|v| PathWord { start: v, arrows: Vec::new() })
            .collect();
        let mut level: Vec<PathWord> = basis.clone();
        for _ in 1..nilpotency {
            let mut next: Vec<PathWord> = Vec::new();
            for p in &level {
                for a in quiver.arrows_from(p.end(&quiver)) {
                    let mut q = p.clone();
                    q.arrows.push(a);
                    next.push(q);
                }
            }
            next.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
            basis.extend(next.iter().cloned());
            level = next;
            if level.is_empty() {
                break;
            }
        }

        let index: HashMap<PathWord, usize> =
            basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let ends: Vec<usize> = basis.iter().map(|p| p.end(&quiver)).collect();
        let extend = basis
            .iter()
            .map(|p| {
                (0..quiver.arrow_count())
                    .map(|a| {
                        if quiver.arrow(a).0 != p.end(&quiver) {
                            return None;
                        }
                        let mut q = p.clone();
                        q.arrows.push(a);
                        index.get(&q).copied()
                    })
                    .collect()
            })
            .collect();
        let mut from_vertex = vec![Vec::new(); quiver.vertex_count];
        for (i, p) in basis.iter().enumerate() {
            from_vertex[p.start].push(i);
        }

        Ok(BoundQuiverAlgebra {
            quiver,
            nilpotency,
            field,
            kind,
            basis,
            index,
            ends,
            extend,
            from_vertex,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn nakayama(&self) -> Option<NakayamaParams> {
        match self.kind {
            AlgebraKind::CircularNakayama(params) => Some(params),
            AlgebraKind::MonomialTruncation => None,
        }
    }

    /// Selfinjectivity is only certified for the circular Nakayama family.
    pub fn is_selfinjective(&self) -> bool {
        self.nakayama().is_some()
    }

    /// Paths of length `>= nilpotency()` vanish.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }

    pub fn path(&self, idx: usize) -> &PathWord {
        &self.basis[idx]
    }

    pub fn path_index(&self, p: &PathWord) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// 0-based end vertex of basis path `idx`.
    pub fn path_end(&self, idx: usize) -> usize {
        self.ends[idx]
    }

    /// Basis index of `path · arrow`, if it survives the truncation.
    pub fn extend(&self, idx: usize, arrow: usize) -> Option<usize> {
        self.extend[idx][arrow]
    }

    /// Basis paths starting at the 0-based vertex `v`, in basis order.
    pub fn paths_from(&self, v: usize) -> &[usize] {
        &self.from_vertex[v]
    }

    /// Validates a 1-based vertex and returns it 0-based.
    pub fn vertex(&self, vertex: usize) -> Result<usize> {
        if vertex == 0 || vertex > self.vertex_count() {
            return Err(Error::BadVertex { vertex, count: self.vertex_count() });
        }
        Ok(vertex - 1)
    }

    /// `p · q`: follow `p`, then `q`.
    pub fn multiply(&self, p: &PathWord, q: &PathWord) -> Result<Product> {
        if self.path_index(p).is_none() || self.path_index(q).is_none() {
            return Err(Error::NotInBasis);
        }
        if p.end(&self.quiver) != q.start {
            return Ok(Product::NotComposable);
        }
        let mut joined = p.clone();
        joined.arrows.extend_from_slice(&q.arrows);
        Ok(match self.path_index(&joined) {
            Some(_) => Product::Path(joined),
            None => Product::Zero,
        })
    }
}

/// The selfinjective Nakayama algebra `kΓ/J^{n+1}` over the circular quiver
/// with `t` vertices.
pub fn nakayama_algebra(t: usize, n: usize, field: FieldSpec) -> Result<Arc<BoundQuiverAlgebra>> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("need n >= 1, got {n}")));
    }
    let quiver = circular_quiver(t)?;
    Ok(Arc::new(BoundQuiverAlgebra::truncated(quiver, n + 1, field)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(t: usize, n: usize) -> Arc<BoundQuiverAlgebra> {
        nakayama_algebra(t, n, FieldSpec::default()).unwrap()
    }

    #[test]
    fn circular_quivers() {
        assert!(circular_quiver(1).is_err());
        assert_eq!(circular_quiver(2).unwrap().arrows_labelled(), vec![(1, 2), (2, 1)]);
        assert_eq!(circular_quiver(3).unwrap().arrows_labelled(), vec![(1, 2), (2, 3), (3, 1)]);
        let q = circular_quiver(5).unwrap();
        assert_eq!(q.arrow_count(), 5);
        for v in 0..5 {
            assert_eq!(q.arrows_from(v).count(), 1);
            assert_eq!(q.arrows_into(v).count(), 1);
        }
    }

    #[test]
    fn nakayama_dimensions() {
        assert_eq!(alg(3, 2).dim(), 9);
        assert_eq!(alg(2, 1).dim(), 4);
        let p = alg(4, 4).nakayama().unwrap();
        assert_eq!((p.q, p.r), (1, 0));
        assert!(p.is_symmetric());
        assert!(nakayama_algebra(3, 0, FieldSpec::default()).is_err());
        assert!(nakayama_algebra(1, 3, FieldSpec::default()).is_err());
    }

    #[test]
    fn one_path_of_each_length_per_vertex() {
        for t in 2..=5 {
            for n in 1..=6 {
                let a = alg(t, n);
                assert_eq!(a.dim(), t * (n + 1));
                for v in 0..t {
                    let mut lens: Vec<usize> =
                        a.paths_from(v).iter().map(|&i| a.path(i).len()).collect();
                    lens.sort();
                    assert_eq!(lens, (0..=n).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn basis_is_length_lex_and_prefix_closed() {
        let a = alg(3, 3);
        let keys: Vec<_> = a.basis().iter().map(|p| p.sort_key()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        for p in a.basis() {
            for k in 0..p.len() {
                let prefix = PathWord { start: p.start, arrows: p.arrows[..k].to_vec() };
                assert!(a.path_index(&prefix).is_some());
                let sstart = a.quiver().arrow(p.arrows[k]).0;
                let suffix = PathWord { start: sstart, arrows: p.arrows[k..].to_vec() };
                assert!(a.path_index(&suffix).is_some());
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let a = alg(3, 2);
        let q = a.quiver().clone();
        let e1 = PathWord::trivial(&q, 1).unwrap();
        let a1 = PathWord::new(&q, 1, &[0]).unwrap();
        let a2 = PathWord::new(&q, 2, &[1]).unwrap();
        let a3 = PathWord::new(&q, 3, &[2]).unwrap();
        assert_eq!(a.multiply(&e1, &a1).unwrap(), Product::Path(a1.clone()));
        let a12 = PathWord::new(&q, 1, &[0, 1]).unwrap();
        assert_eq!(a.multiply(&a1, &a2).unwrap(), Product::Path(a12.clone()));
        assert_eq!(a12.end(&q), 2);
        assert_eq!(a.multiply(&a12, &a3).unwrap(), Product::Zero);
        assert_eq!(a.multiply(&a1, &a3).unwrap(), Product::NotComposable);
        let long = PathWord::new(&q, 1, &[0, 1, 2]).unwrap();
        assert_eq!(a.multiply(&long, &e1), Err(Error::NotInBasis));
    }

    #[test]
    fn multiplication_is_associative() {
        for (t, n) in [(2, 2), (3, 2), (3, 4)] {
            let a = alg(t, n);
            let b = a.basis();
            let mul = |x: &Product, y: &PathWord| match x {
                Product::Path(p) => a.multiply(p, y).unwrap(),
                other => other.clone(),
            };
            for x in b {
                for y in b {
                    for z in b {
                        let left = mul(&a.multiply(x, y).unwrap(), z);
                        let right = match a.multiply(y, z).unwrap() {
                            Product::Path(yz) => a.multiply(x, &yz).unwrap(),
                            other => other,
                        };
                        // non-composable and zero both mean the product vanishes
                        let vanish = |p: &Product| !matches!(p, Product::Path(_));
                        assert_eq!(vanish(&left), vanish(&right));
                        if !vanish(&left) {
                            assert_eq!(left, right);
                        }
                    }
                }
            }
        }
    }
}
