//! Lattice spec strings (`A2+A2+A2`, `4*A2`, `d5 + E7`) and vector literals
//! (`;`-separated components of `,`-separated rationals).

use crate::error::{Error, Result};
use crate::lattice::{CompositeLattice, IrreducibleRootLattice, Kind, Lattice};
use crate::vector::LatticeVector;

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parses the `+`-separated summand list into `(kind, rank)` pairs.
pub fn parse_summands(text: &str) -> Result<Vec<(Kind, usize)>> {
    // positions refer to the original text, whitespace included
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::EmptySpec);
    }
    let mut out = Vec::new();
    let mut i = 0;
    loop {
        let start = chars.get(i).map_or(text.len(), |c| c.0);
        let digits = |i: &mut usize| -> Option<(usize, usize)> {
            let from = *i;
            while *i < chars.len() && chars[*i].1.is_ascii_digit() {
                *i += 1;
            }
            if *i == from {
                return None;
            }
            let s: String = chars[from..*i].iter().map(|c| c.1).collect();
            s.parse().ok().map(|v| (v, chars[from].0))
        };
        let mut multiplier = 1;
        if chars.get(i).is_some_and(|c| c.1.is_ascii_digit()) {
            let (m, _) = digits(&mut i).ok_or_else(|| parse_error(start, "bad multiplier"))?;
            match chars.get(i) {
                Some((_, '*')) => i += 1,
                _ => {
                    let pos = chars.get(i).map_or(text.len(), |c| c.0);
                    return Err(parse_error(pos, "expected '*' after multiplier"));
                }
            }
            if m == 0 {
                return Err(parse_error(start, "multiplier must be positive"));
            }
            multiplier = m;
        }
        let (pos, letter) = *chars
            .get(i)
            .ok_or_else(|| parse_error(text.len(), "expected lattice kind A, D or E"))?;
        let kind = match letter.to_ascii_uppercase() {
            'A' => Kind::A,
            'D' => Kind::D,
            'E' => Kind::E,
            other => return Err(parse_error(pos, format!("unknown lattice kind {other:?}"))),
        };
        i += 1;
        let rank_pos = chars.get(i).map_or(text.len(), |c| c.0);
        let (rank, _) = digits(&mut i).ok_or_else(|| parse_error(rank_pos, "expected rank"))?;
        out.extend(std::iter::repeat_n((kind, rank), multiplier));
        match chars.get(i) {
            None => break,
            Some((_, '+')) => i += 1,
            Some(&(p, c)) => return Err(parse_error(p, format!("unexpected {c:?}"))),
        }
    }
    Ok(out)
}

pub fn parse_lattice_spec(text: &str) -> Result<CompositeLattice> {
    let summands = parse_summands(text)?;
    let comps = summands
        .into_iter()
        .map(|(k, r)| IrreducibleRootLattice::new(k, r))
        .collect::<Result<Vec<_>>>()?;
    CompositeLattice::new(comps)
}

/// Parses a vector literal against a lattice: either one `,`-list covering
/// the total rank, or one `;`-separated group per component.
pub fn parse_vector_literal(text: &str, lattice: &CompositeLattice) -> Result<LatticeVector> {
    let groups: Vec<&str> = text.split(';').collect();
    let mut parts = Vec::with_capacity(groups.len());
    let mut offset = 0;
    for g in &groups {
        let v: LatticeVector = g.parse().map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: position + offset,
                message,
            },
            other => other,
        })?;
        parts.push(v);
        offset += g.len() + 1;
    }
    if groups.len() > 1 {
        if groups.len() != lattice.components().len() {
            return Err(parse_error(
                0,
                format!(
                    "{} components given for a lattice with {}",
                    groups.len(),
                    lattice.components().len()
                ),
            ));
        }
        for (p, c) in parts.iter().zip(lattice.components()) {
            c.check_dim(p)?;
        }
    }
    let v = LatticeVector::concat(&parts);
    lattice.check_dim(&v)?;
    Ok(v)
}
