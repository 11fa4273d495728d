//! Text grammar for cycle types, shared by the CLI and the cache files.
//!
//! * partition: comma list of parts (`3,2,2`), frequency form (`1^2 2^3`),
//!   or `-` for the empty partition
//! * bipartition: `λ|μ`, e.g. `2,1|3` or `1,1|-`
//! * r-partite type: leading `r=`, components joined by `|`: `r=3: 2|1,1|-`
//! * `D_n` class: bipartition with a trailing `+` or `-` on split classes

use crate::partition::{Bipartition, DnClass, Partition, RPartiteType, SplitSign};
use crate::Error;

pub fn parse_partition(s: &str) -> Result<Partition, Error> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Partition::empty());
    }
    if s.contains('^') {
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let (part, mult) = tok
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("bad frequency token {tok:?}")))?;
            let part: u32 = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {part:?}")))?;
            let mult: u32 = mult
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity {mult:?}")))?;
            pairs.push((part, mult));
        }
        return Partition::from_freq(pairs).map_err(|e| Error::Parse(e.to_string()));
    }
    let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
    Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_bipartition(s: &str) -> Result<Bipartition, Error> {
    let (lam, mu) = s
        .trim()
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("bipartition {s:?} needs a '|'")))?;
    Ok(Bipartition::new(
        parse_partition(lam)?,
        parse_partition(mu)?,
    ))
}

pub fn parse_r_partite(s: &str) -> Result<RPartiteType, Error> {
    let s = s.trim();
    let rest = s
        .strip_prefix("r=")
        .ok_or_else(|| Error::Parse(format!("r-partite type {s:?} must start with 'r='")))?;
    let (r, comps_str) = rest
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("r-partite type {s:?} needs 'r=R: ...'")))?;
    let r: usize = r
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad modulus {r:?}")))?;
    let comps: Result<Vec<Partition>, Error> = comps_str.split('|').map(parse_partition).collect();
    let comps = comps?;
    if comps.len() != r {
        return Err(Error::Parse(format!(
            "expected {r} components, found {}",
            comps.len()
        )));
    }
    RPartiteType::new(comps).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses a `D_n` class: a bipartition with an optional trailing sign.
/// `2,2|-+` is the plus class of `(2,2 | ∅)`; `1,1|-` carries no sign.
pub fn parse_dn_class(s: &str) -> Result<DnClass, Error> {
    let s = s.trim();
    let (head, tail) = s
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("D_n class {s:?} needs a '|'")))?;
    let (mu_str, sign) = if let Some(rest) = tail.strip_suffix('+') {
        (rest, SplitSign::Plus)
    } else if tail.len() > 1 && tail.ends_with('-') {
        (&tail[..tail.len() - 1], SplitSign::Minus)
    } else {
        (tail, SplitSign::None)
    };
    let bip = Bipartition::new(parse_partition(head)?, parse_partition(mu_str)?);
    let cls = match sign {
        SplitSign::None => DnClass::from_bipartition(bip),
        s => DnClass::new(bip, s),
    };
    cls.map_err(|e| Error::Parse(e.to_string()))
}

/// Frequency-form rendering, e.g. `1^2 2^3`; `-` for the empty partition.
pub fn format_partition_freq(p: &Partition) -> String {
    if p.is_empty() {
        return "-".into();
    }
    p.freq()
        .iter()
        .map(|(part, mult)| format!("{part}^{mult}"))
        .collect::<Vec<_>>()
        .join(" ")
}
