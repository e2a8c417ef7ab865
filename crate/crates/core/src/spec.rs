//! Textual graph descriptions used by the command line and examples.
//!
//! ```text
//! F(k,d)            generalised Andrásfai graph
//! C(n)  K(a,b)  K(n)  petersen
//! <base>xT          balanced blow-up with classes of size T
//! <base>x[t1,..]    blow-up with the given class sizes
//! @path.json        graph or circular arrangement stored as JSON
//! ```

use std::fmt;
use std::path::PathBuf;

use crate::andrasfai::{blow_up, generalized_andrasfai, BlowUp};
use crate::circle::{represent_blow_up, CircularArrangement};
use crate::error::{Error, Result};
use crate::graph::{complete, complete_bipartite, cycle, petersen, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Andrasfai { k: usize, d: usize },
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Complete(usize),
    Petersen,
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multiplicities {
    Balanced(usize),
    Explicit(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub base: Base,
    pub blow: Option<Multiplicities>,
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            Base::Andrasfai { k, d } => write!(f, "F({k},{d})")?,
            Base::Cycle(n) => write!(f, "C({n})")?,
            Base::CompleteBipartite(a, b) => write!(f, "K({a},{b})")?,
            Base::Complete(n) => write!(f, "K({n})")?,
            Base::Petersen => write!(f, "petersen")?,
            Base::File(p) => write!(f, "@{}", p.display())?,
        }
        match &self.blow {
            None => Ok(()),
            Some(Multiplicities::Balanced(t)) => write!(f, "x{t}"),
            Some(Multiplicities::Explicit(ts)) => {
                let parts: Vec<String> = ts.iter().map(usize::to_string).collect();
                write!(f, "x[{}]", parts.join(","))
            }
        }
    }
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("expected a non-negative integer for {what}, got `{s}`")))
}

fn parse_args(s: &str, spec: &str) -> Result<Vec<usize>> {
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("malformed argument list in `{spec}`")))?;
    inner.split(',').map(|a| parse_usize(a, spec)).collect()
}

impl std::str::FromStr for GraphSpec {
    type Err = Error;

    fn from_str(raw: &str) -> Result<Self> {
        let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(path) = s.strip_prefix('@') {
            if path.is_empty() {
                return Err(Error::Parse("`@` must be followed by a path".into()));
            }
            return Ok(GraphSpec { base: Base::File(PathBuf::from(path)), blow: None });
        }
        // The base ends at its closing parenthesis, or is the word `petersen`.
        let (head, tail) = if let Some(rest) = s.strip_prefix("petersen") {
            ("petersen", rest)
        } else {
            let close = s.find(')').ok_or_else(|| Error::Parse(format!("unrecognised graph spec `{raw}`")))?;
            s.split_at(close + 1)
        };
        let base = if head == "petersen" {
            Base::Petersen
        } else {
            let (name, args) =
                head.split_at(head.find('(').ok_or_else(|| Error::Parse(format!("unrecognised graph spec `{raw}`")))?);
            let args = parse_args(args, raw)?;
            match (name, args.as_slice()) {
                ("F", [k, d]) => Base::Andrasfai { k: *k, d: *d },
                ("C", [n]) => Base::Cycle(*n),
                ("K", [a, b]) => Base::CompleteBipartite(*a, *b),
                ("K", [n]) => Base::Complete(*n),
                _ => return Err(Error::Parse(format!("unrecognised graph spec `{raw}`"))),
            }
        };
        let blow = if tail.is_empty() {
            None
        } else {
            let m = tail.strip_prefix('x').ok_or_else(|| Error::Parse(format!("unexpected `{tail}` in `{raw}`")))?;
            if let Some(list) = m.strip_prefix('[') {
                let list = list.strip_suffix(']').ok_or_else(|| Error::Parse(format!("unclosed `[` in `{raw}`")))?;
                let ts = if list.is_empty() {
                    Vec::new()
                } else {
                    list.split(',').map(|t| parse_usize(t, raw)).collect::<Result<_>>()?
                };
                Some(Multiplicities::Explicit(ts))
            } else {
                Some(Multiplicities::Balanced(parse_usize(m, raw)?))
            }
        };
        Ok(GraphSpec { base, blow })
    }
}

/// A resolved graph description.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
    /// `k` when the base is `F(k,d)`.
    pub k: Option<usize>,
    pub blow_up: Option<BlowUp>,
    /// Present when the description named an arrangement file.
    pub arrangement: Option<CircularArrangement>,
}

impl Instance {
    /// The circle representation: the canonical one for blow-ups of `F(k,d)`,
    /// or the stored one for arrangement files.
    pub fn arrangement(&self) -> Result<CircularArrangement> {
        if let Some(a) = &self.arrangement {
            return Ok(a.clone());
        }
        match (&self.k, &self.blow_up) {
            (Some(k), Some(b)) => represent_blow_up(b, *k),
            _ => Err(Error::InvalidParameter(format!(
                "`{}` has no circle representation; use F(k,d) or an arrangement file",
                self.label
            ))),
        }
    }
}

impl GraphSpec {
    pub fn resolve(&self) -> Result<Instance> {
        let label = self.to_string();
        let mut k = None;
        let mut arrangement = None;
        let base = match &self.base {
            Base::Andrasfai { k: kk, d } => {
                k = Some(*kk);
                generalized_andrasfai(*kk, *d)?
            }
            Base::Cycle(n) => cycle(*n)?,
            Base::CompleteBipartite(a, b) => complete_bipartite(*a, *b)?,
            Base::Complete(n) => complete(*n)?,
            Base::Petersen => petersen(),
            Base::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let value: serde_json::Value = serde_json::from_str(&text)?;
                if value.get("positions").is_some() {
                    let arr: CircularArrangement = serde_json::from_value(value)?;
                    let g = arr.graph().clone();
                    arrangement = Some(arr);
                    g
                } else {
                    serde_json::from_value(value)?
                }
            }
        };
        if arrangement.is_some() && self.blow.is_some() {
            return Err(Error::InvalidParameter("an arrangement file cannot be blown up".into()));
        }
        let mults = match &self.blow {
            None => k.map(|_| vec![1; base.n()]),
            Some(Multiplicities::Balanced(t)) => Some(vec![*t; base.n()]),
            Some(Multiplicities::Explicit(ts)) => Some(ts.clone()),
        };
        let blow_up = mults.map(|m| blow_up(&base, &m)).transpose()?;
        let graph = blow_up.as_ref().map(|b| b.result.clone()).unwrap_or(base);
        Ok(Instance { label, graph, k, blow_up, arrangement })
    }
}

/// Parses and resolves in one step.
pub fn resolve(spec: &str) -> Result<Instance> {
    spec.parse::<GraphSpec>()?.resolve()
}
