use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::homology::syzygy_power;
use crate::rep::{projective, simple, uniserial, QuiverModule};

pub const GRAMMAR: &str =
    "module specifiers are simple:<i> | projective:<i> | uniserial:<i>:<len> | syzygy:<k>:<spec>, without whitespace";

/// A module named on the command line, e.g. `syzygy:2:uniserial:1:3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSpec {
    Simple(usize),
    Projective(usize),
    Uniserial(usize, usize),
    Syzygy(usize, Box<ModuleSpec>),
}

fn number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn bad(s: &str) -> Error {
    Error::InvalidParameter(format!("bad module specifier `{s}`: {GRAMMAR}"))
}

impl FromStr for ModuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, rest) = s.split_once(':').ok_or_else(|| bad(s))?;
        let spec = match head {
            "simple" => ModuleSpec::Simple(number(rest).ok_or_else(|| bad(s))?),
            "projective" => ModuleSpec::Projective(number(rest).ok_or_else(|| bad(s))?),
            "uniserial" => {
                let (i, l) = rest.split_once(':').ok_or_else(|| bad(s))?;
                ModuleSpec::Uniserial(number(i).ok_or_else(|| bad(s))?, number(l).ok_or_else(|| bad(s))?)
            }
            "syzygy" => {
                let (k, inner) = rest.split_once(':').ok_or_else(|| bad(s))?;
                let k = number(k).ok_or_else(|| bad(s))?;
                ModuleSpec::Syzygy(k, Box::new(inner.parse().map_err(|_| bad(s))?))
            }
            _ => return Err(bad(s)),
        };
        Ok(spec)
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Simple(i) => write!(f, "simple:{i}"),
            ModuleSpec::Projective(i) => write!(f, "projective:{i}"),
            ModuleSpec::Uniserial(i, l) => write!(f, "uniserial:{i}:{l}"),
            ModuleSpec::Syzygy(k, inner) => write!(f, "syzygy:{k}:{inner}"),
        }
    }
}

impl ModuleSpec {
    /// Range checks against the algebra, without building anything.
    pub fn validate(&self, algebra: &BoundQuiverAlgebra) -> Result<()> {
        let vertex = |i: usize| algebra.vertex(i).map(|_| ());
        match self {
            ModuleSpec::Simple(i) | ModuleSpec::Projective(i) => vertex(*i),
            ModuleSpec::Uniserial(i, l) => {
                vertex(*i)?;
                if *l == 0 || *l > algebra.nilpotency() {
                    return Err(Error::InvalidParameter(format!(
                        "uniserial length {l} outside 1..={}",
                        algebra.nilpotency()
                    )));
                }
                if algebra.nakayama().is_none() {
                    return Err(Error::InvalidParameter("uniserial modules need a circular Nakayama algebra".into()));
                }
                Ok(())
            }
            ModuleSpec::Syzygy(_, inner) => inner.validate(algebra),
        }
    }

    pub fn build(&self, algebra: &Arc<BoundQuiverAlgebra>) -> Result<QuiverModule> {
        match self {
            ModuleSpec::Simple(i) => simple(algebra, *i),
            ModuleSpec::Projective(i) => projective(algebra, *i),
            ModuleSpec::Uniserial(i, l) => uniserial(algebra, *i, *l),
            ModuleSpec::Syzygy(k, inner) => Ok(syzygy_power(&inner.build(algebra)?, *k)),
        }
    }
}
