//! Case tags: `thm-main-<i..vi>[,key=value]*` and `borel,n=<n>`.
//!
//! Keys: `n`, `n1`, `n2`, and `P` given as cyclic orders joined by `x`
//! (`P=1`, `P=2`, `P=4`, `P=2x2`).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::FamilyTag;

/// Largest `n` (or `n_i`) for the `G_n` and `(C_{2^n})^3` cases.
pub const MAX_N: u32 = 2;
/// Largest `|P|`.
pub const MAX_P: usize = 4;
/// Range of `n` for the Borel case.
pub const BOREL_RANGE: std::ops::RangeInclusive<u32> = 2..=4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseSpec {
    /// `O(P x G_n)`.
    I { p: Vec<u32>, n: u32 },
    /// `O(G_{n1} x G_{n2})`.
    II { n1: u32, n2: u32 },
    /// `B_0(O(P x A_5))`.
    III { p: Vec<u32> },
    /// `B_0(O(G_n x A_5))`.
    IV { n: u32 },
    /// `B_0(O((C_{2^n})^3 x| C_7))`.
    V { n: u32 },
    /// `O((C_{2^n})^3 x| (C_7 x| C_3))`.
    VI { n: u32 },
    /// Borel subgroup of `SL_2(2^n)`.
    Borel { n: u32 },
}

fn p_exponents(p: &[u32]) -> Result<Vec<u32>> {
    p.iter()
        .map(|&m| {
            if m.is_power_of_two() && m > 1 {
                Ok(m.trailing_zeros())
            } else {
                Err(Error::Parse(format!("P factor {m} is not a nontrivial 2-power")))
            }
        })
        .collect()
}

fn p_string(p: &[u32]) -> String {
    if p.is_empty() {
        "1".into()
    } else {
        p.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("x")
    }
}

impl CaseSpec {
    pub fn p_order(&self) -> usize {
        match self {
            CaseSpec::I { p, .. } | CaseSpec::III { p } => p.iter().map(|&m| m as usize).product(),
            _ => 1,
        }
    }

    /// Rejects parameters outside the supported ranges.
    pub fn check_caps(&self, max_n: u32, max_p: usize) -> Result<()> {
        let bad = |what: String| Err(Error::Unsupported(format!("{self}: {what}")));
        let ns: Vec<u32> = match self {
            CaseSpec::I { n, .. } | CaseSpec::IV { n } | CaseSpec::V { n } | CaseSpec::VI { n } => vec![*n],
            CaseSpec::II { n1, n2 } => vec![*n1, *n2],
            CaseSpec::III { .. } => vec![],
            CaseSpec::Borel { n } => {
                if !BOREL_RANGE.contains(n) {
                    return bad(format!("Borel case needs n in {BOREL_RANGE:?}"));
                }
                vec![]
            }
        };
        if ns.iter().any(|&n| n == 0 || n > max_n) {
            return bad(format!("n must lie in 1..={max_n}"));
        }
        if self.p_order() > max_p {
            return bad(format!("|P| must be at most {max_p}"));
        }
        Ok(())
    }

    /// The group whose principal block is meant.
    pub fn family(&self) -> Result<FamilyTag> {
        let with_p = |p: &[u32], rest: FamilyTag| -> Result<FamilyTag> {
            if p.is_empty() {
                Ok(rest)
            } else {
                Ok(FamilyTag::Product(vec![FamilyTag::Abelian(p_exponents(p)?), rest]))
            }
        };
        match self {
            CaseSpec::I { p, n } => with_p(p, FamilyTag::G(*n)),
            CaseSpec::II { n1, n2 } => Ok(FamilyTag::Product(vec![FamilyTag::G(*n1), FamilyTag::G(*n2)])),
            CaseSpec::III { p } => with_p(p, FamilyTag::A5),
            CaseSpec::IV { n } => Ok(FamilyTag::Product(vec![FamilyTag::G(*n), FamilyTag::A5])),
            CaseSpec::V { n } => Ok(FamilyTag::E7(*n)),
            CaseSpec::VI { n } => Ok(FamilyTag::E21(*n)),
            CaseSpec::Borel { n } => Ok(FamilyTag::Borel(*n)),
        }
    }

    /// Every supported case within the caps, in canonical order.
    pub fn all(max_n: u32, max_p: usize) -> Vec<CaseSpec> {
        let ps: Vec<Vec<u32>> = [vec![], vec![2], vec![4], vec![2, 2]]
            .into_iter()
            .filter(|p| p.iter().map(|&m| m as usize).product::<usize>() <= max_p)
            .collect();
        let ns: Vec<u32> = (1..=max_n.min(MAX_N)).collect();
        let mut out = Vec::new();
        for &n in &ns {
            for p in &ps {
                out.push(CaseSpec::I { p: p.clone(), n });
            }
        }
        for &n1 in &ns {
            for &n2 in &ns {
                if n1 <= n2 {
                    out.push(CaseSpec::II { n1, n2 });
                }
            }
        }
        for p in &ps {
            out.push(CaseSpec::III { p: p.clone() });
        }
        for &n in &ns {
            out.push(CaseSpec::IV { n });
        }
        for &n in &ns {
            out.push(CaseSpec::V { n });
        }
        for &n in &ns {
            out.push(CaseSpec::VI { n });
        }
        for n in BOREL_RANGE {
            out.push(CaseSpec::Borel { n });
        }
        out
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseSpec::I { p, n } => write!(f, "thm-main-i,P={},n={n}", p_string(p)),
            CaseSpec::II { n1, n2 } => write!(f, "thm-main-ii,n1={n1},n2={n2}"),
            CaseSpec::III { p } => write!(f, "thm-main-iii,P={}", p_string(p)),
            CaseSpec::IV { n } => write!(f, "thm-main-iv,n={n}"),
            CaseSpec::V { n } => write!(f, "thm-main-v,n={n}"),
            CaseSpec::VI { n } => write!(f, "thm-main-vi,n={n}"),
            CaseSpec::Borel { n } => write!(f, "borel,n={n}"),
        }
    }
}

fn parse_p(s: &str) -> Result<Vec<u32>> {
    if s == "1" {
        return Ok(Vec::new());
    }
    let p: Vec<u32> = s
        .split('x')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad P factor {t:?}"))))
        .collect::<Result<_>>()?;
    p_exponents(&p)?;
    Ok(p)
}

impl FromStr for CaseSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(',').map(str::trim);
        let head = parts.next().unwrap_or_default();
        let mut n = None;
        let mut n1 = None;
        let mut n2 = None;
        let mut p = Vec::new();
        for kv in parts {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
            let num = || v.parse::<u32>().map_err(|_| Error::Parse(format!("bad value for {k}: {v:?}")));
            match k {
                "n" => n = Some(num()?),
                "n1" => n1 = Some(num()?),
                "n2" => n2 = Some(num()?),
                "P" => p = parse_p(v)?,
                _ => return Err(Error::Parse(format!("unknown key {k:?}"))),
            }
        }
        let need = |x: Option<u32>, k: &str| x.ok_or_else(|| Error::Parse(format!("{head} needs {k}")));
        Ok(match head {
            "thm-main-i" => CaseSpec::I { p, n: need(n, "n")? },
            "thm-main-ii" => CaseSpec::II {
                n1: need(n1, "n1")?,
                n2: need(n2, "n2")?,
            },
            "thm-main-iii" => CaseSpec::III { p },
            "thm-main-iv" => CaseSpec::IV { n: need(n, "n")? },
            "thm-main-v" => CaseSpec::V { n: need(n, "n")? },
            "thm-main-vi" => CaseSpec::VI { n: need(n, "n")? },
            "borel" => CaseSpec::Borel { n: need(n, "n")? },
            _ => return Err(Error::Parse(format!("unknown case {head:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for c in CaseSpec::all(2, 4) {
            assert_eq!(c.to_string().parse::<CaseSpec>().unwrap(), c);
            c.check_caps(2, 4).unwrap();
            c.family().unwrap();
        }
        assert_eq!(CaseSpec::all(2, 4).len(), 8 + 3 + 4 + 2 + 2 + 2 + 3);
        assert!("thm-main-v".parse::<CaseSpec>().is_err());
        assert!("thm-main-i,P=3,n=1".parse::<CaseSpec>().is_err());
        assert!("borel,n=5".parse::<CaseSpec>().unwrap().check_caps(2, 4).is_err());
    }
}
