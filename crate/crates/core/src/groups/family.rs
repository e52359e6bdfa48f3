//! Family descriptors and their string grammar.
//!
//! `1`, `P(e1,..)`, `C(m)`, `G(n)`, `A5`, `F21`, `E8:C7`, `E8:F21`,
//! `E(n):C7`, `E(n):F21`, `B(n)`, `AutSL28`, and products joined by `x`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Trivial,
    /// Abelian 2-group with the given exponents of 2.
    Abelian(Vec<u32>),
    Cyclic(u32),
    /// `(C_{2^n} x C_{2^n}) x| C_3`.
    G(u32),
    A5,
    /// `C_7 x| C_3`.
    F21,
    /// `(C_{2^n})^3 x| C_7`.
    E7(u32),
    /// `(C_{2^n})^3 x| (C_7 x| C_3)`.
    E21(u32),
    /// `(C_2)^n x| C_{2^n - 1}`.
    Borel(u32),
    /// Block data only.
    AutSL28,
    Product(Vec<FamilyTag>),
}

impl FamilyTag {
    /// Factors of a product, or the tag itself.
    pub fn factors(&self) -> Vec<FamilyTag> {
        match self {
            FamilyTag::Product(v) => v.clone(),
            t => vec![t.clone()],
        }
    }

    pub fn product(tags: Vec<FamilyTag>) -> FamilyTag {
        let flat: Vec<FamilyTag> = tags.into_iter().flat_map(|t| t.factors()).collect();
        if flat.len() == 1 {
            flat.into_iter().next().unwrap()
        } else {
            FamilyTag::Product(flat)
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilyTag::Trivial => write!(f, "1"),
            FamilyTag::Abelian(e) => write!(f, "P({})", list(e)),
            FamilyTag::Cyclic(m) => write!(f, "C({m})"),
            FamilyTag::G(n) => write!(f, "G({n})"),
            FamilyTag::A5 => write!(f, "A5"),
            FamilyTag::F21 => write!(f, "F21"),
            FamilyTag::E7(1) => write!(f, "E8:C7"),
            FamilyTag::E21(1) => write!(f, "E8:F21"),
            FamilyTag::E7(n) => write!(f, "E({n}):C7"),
            FamilyTag::E21(n) => write!(f, "E({n}):F21"),
            FamilyTag::Borel(n) => write!(f, "B({n})"),
            FamilyTag::AutSL28 => write!(f, "AutSL28"),
            FamilyTag::Product(v) => {
                let parts: Vec<String> = v.iter().map(|t| t.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
        }
    }
}

fn parse_args(s: &str, head: &str) -> Result<Option<Vec<u32>>> {
    let Some(rest) = s.strip_prefix(head) else { return Ok(None) };
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected {head}(..) in {s:?}")))?;
    let vals = inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad integer {x:?} in {s:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(Some(vals))
}

fn one_arg(s: &str, head: &str) -> Result<Option<u32>> {
    match parse_args(s, head)? {
        None => Ok(None),
        Some(v) if v.len() == 1 && v[0] >= 1 => Ok(Some(v[0])),
        Some(_) => Err(Error::Parse(format!("{head}(..) takes one positive integer: {s:?}"))),
    }
}

fn parse_atom(s: &str) -> Result<FamilyTag> {
    let s = s.trim();
    match s {
        "1" => return Ok(FamilyTag::Trivial),
        "A5" => return Ok(FamilyTag::A5),
        "F21" | "C7:C3" => return Ok(FamilyTag::F21),
        "E8:C7" => return Ok(FamilyTag::E7(1)),
        "E8:F21" => return Ok(FamilyTag::E21(1)),
        "AutSL28" | "AutSL28-B0" => return Ok(FamilyTag::AutSL28),
        _ => {}
    }
    if let Some(e) = s.strip_prefix("E(") {
        let (n, rest) = e
            .split_once(')')
            .ok_or_else(|| Error::Parse(format!("unterminated E(..) in {s:?}")))?;
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad level in {s:?}")))?;
        if n == 0 {
            return Err(Error::Parse(format!("level must be positive in {s:?}")));
        }
        return match rest {
            ":C7" => Ok(FamilyTag::E7(n)),
            ":F21" | ":C7:C3" => Ok(FamilyTag::E21(n)),
            _ => Err(Error::Parse(format!("unknown top group in {s:?}"))),
        };
    }
    if let Some(e) = parse_args(s, "P")? {
        if e.contains(&0) {
            return Err(Error::Parse(format!("exponents must be positive in {s:?}")));
        }
        return Ok(if e.is_empty() {
            FamilyTag::Trivial
        } else {
            FamilyTag::Abelian(e)
        });
    }
    if let Some(m) = one_arg(s, "C")? {
        return Ok(FamilyTag::Cyclic(m));
    }
    if let Some(n) = one_arg(s, "G")? {
        return Ok(FamilyTag::G(n));
    }
    if let Some(n) = one_arg(s, "B")? {
        return Ok(FamilyTag::Borel(n));
    }
    Err(Error::Parse(format!("unknown family {s:?}")))
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('x').collect();
        if parts.iter().any(|p| p.trim().is_empty()) {
            return Err(Error::Parse(format!("empty factor in {s:?}")));
        }
        let tags = parts.into_iter().map(parse_atom).collect::<Result<Vec<_>>>()?;
        Ok(FamilyTag::product(tags))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in [
            "G(1)", "P(2,2)", "A5", "E8:C7", "E8:F21", "E(2):C7", "E(2):F21", "B(3)", "P(1)xG(2)", "G(1)xA5",
            "1", "C(3)", "F21", "AutSL28",
        ] {
            let t: FamilyTag = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!("E(1):C7".parse::<FamilyTag>().unwrap().to_string(), "E8:C7");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "G()", "G(0)", "Q8", "Gx", "P(1,a)", "E(2):C5"] {
            assert!(s.parse::<FamilyTag>().is_err(), "{s}");
        }
    }
}
