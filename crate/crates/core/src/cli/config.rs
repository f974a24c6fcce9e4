use std::path::PathBuf;
use std::sync::Arc;

use serde::Deserialize;

use super::modspec::ModuleSpec;
use crate::algebra::{nakayama_algebra, BoundQuiverAlgebra, Quiver};
use crate::error::{Error, Result};
use crate::homology::DEFAULT_MAX_DEGREE;
use crate::linalg::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    CircularNakayama {
        t: usize,
        n: usize,
    },
    /// Path algebra of an arbitrary quiver modulo all paths of length `nilpotency`.
    MonomialTruncation {
        vertices: usize,
        arrows: Vec<(usize, usize)>,
        nilpotency: usize,
    },
}

impl AlgebraSpec {
    pub fn build(&self, field: FieldSpec) -> Result<Arc<BoundQuiverAlgebra>> {
        match self {
            AlgebraSpec::CircularNakayama { t, n } => nakayama_algebra(*t, *n, field),
            AlgebraSpec::MonomialTruncation { vertices, arrows, nilpotency } => {
                let quiver = Quiver::new(*vertices, arrows)?;
                Ok(Arc::new(BoundQuiverAlgebra::truncated(quiver, *nilpotency, field)?))
            }
        }
    }

    pub fn nakayama_params(&self) -> Option<(usize, usize)> {
        match self {
            AlgebraSpec::CircularNakayama { t, n } => Some((*t, *n)),
            AlgebraSpec::MonomialTruncation { .. } => None,
        }
    }
}

/// Inclusive parameter grid for `sweep`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRanges {
    pub t: (usize, usize),
    pub n: (usize, usize),
}

/// One JSON config document. Every field can also be set by a flag, and
/// flags win.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub field_p: Option<u32>,
    pub algebra: Option<AlgebraSpec>,
    pub max_degree: Option<usize>,
    pub module: Option<String>,
    pub target: Option<String>,
    pub tail: Option<usize>,
    pub window: Option<usize>,
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
    pub sweep: Option<SweepRanges>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("config: {e}")))
    }

    /// Fields set in `over` replace ours.
    pub fn merge(self, over: RunConfig) -> RunConfig {
        RunConfig {
            field_p: over.field_p.or(self.field_p),
            algebra: over.algebra.or(self.algebra),
            max_degree: over.max_degree.or(self.max_degree),
            module: over.module.or(self.module),
            target: over.target.or(self.target),
            tail: over.tail.or(self.tail),
            window: over.window.or(self.window),
            out: over.out.or(self.out),
            workers: over.workers.or(self.workers),
            sweep: over.sweep.or(self.sweep),
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraSpec> {
    serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("algebra: {e}")))
}

/// A fully checked configuration. Nothing has been computed yet apart from
/// the algebra's path basis.
#[derive(Debug, Clone)]
pub struct Validated {
    pub field: FieldSpec,
    pub algebra_spec: Option<AlgebraSpec>,
    pub algebra: Option<Arc<BoundQuiverAlgebra>>,
    pub max_degree: usize,
    pub module: Option<ModuleSpec>,
    pub target: Option<ModuleSpec>,
    pub tail: Option<usize>,
    pub window: Option<usize>,
    pub out: Option<PathBuf>,
    pub workers: usize,
    pub sweep: Option<SweepRanges>,
}

impl RunConfig {
    pub fn validate(self) -> Result<Validated> {
        let field = FieldSpec::new(self.field_p.unwrap_or(FieldSpec::default().characteristic()))?;
        let max_degree = self.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
        if max_degree == 0 {
            return Err(Error::InvalidParameter("max_degree must be positive".into()));
        }
        let algebra = self.algebra.as_ref().map(|a| a.build(field)).transpose()?;
        let spec = |s: &Option<String>| -> Result<Option<ModuleSpec>> {
            let Some(s) = s else { return Ok(None) };
            let parsed: ModuleSpec = s.parse()?;
            if let Some(a) = &algebra {
                parsed.validate(a)?;
            }
            Ok(Some(parsed))
        };
        let module = spec(&self.module)?;
        let target = spec(&self.target)?;
        if let Some(tail) = self.tail {
            if tail == 0 || tail > max_degree {
                return Err(Error::InvalidParameter(format!("tail {tail} outside 1..={max_degree}")));
            }
        }
        if self.window == Some(0) {
            return Err(Error::InvalidParameter("window must be positive".into()));
        }
        let workers = match self.workers {
            Some(0) => return Err(Error::InvalidParameter("workers must be positive".into())),
            Some(w) => w,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        if let Some(r) = &self.sweep {
            if r.t.0 < 2 || r.t.0 > r.t.1 || r.n.0 < 1 || r.n.0 > r.n.1 {
                return Err(Error::InvalidParameter(format!(
                    "sweep ranges need 2 <= t_lo <= t_hi and 1 <= n_lo <= n_hi, got t {:?} n {:?}",
                    r.t, r.n
                )));
            }
        }
        Ok(Validated {
            field,
            algebra_spec: self.algebra,
            algebra,
            max_degree,
            module,
            target,
            tail: self.tail,
            window: self.window,
            out: self.out,
            workers,
            sweep: self.sweep,
        })
    }
}
