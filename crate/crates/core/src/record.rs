//! Serializable per-ideal records and parsing of generator lists.

use serde::{Deserialize, Serialize};

use crate::affine::{d_point, element_of_ideal};
use crate::duality::{box_to_root_a, box_to_root_b, box_to_root_c, Duality};
use crate::error::{Error, Result};
use crate::ideals::{Antichain, Ideal};
use crate::linalg::format_q;
use crate::rootsys::{format_coords, CartanType, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub type_label: String,
    pub rank: usize,
    pub generators: Vec<Vec<i32>>,
    pub size: usize,
    pub sim: usize,
    pub gen: usize,
    pub class: usize,
    /// Exact rationals rendered as `num/den`.
    pub d_point: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_generators: Option<Vec<Vec<i32>>>,
}

impl IdealRecord {
    pub fn new(ideal: &Ideal<'_>, duality: Option<&Duality<'_>>) -> Self {
        let rs = ideal.system();
        let gens = ideal.generators();
        let d = d_point(&element_of_ideal(ideal)).expect("elements of ideals are admissible");
        IdealRecord {
            type_label: rs.cartan_type().to_string(),
            rank: rs.rank(),
            generators: gens.coords(rs),
            size: ideal.len(),
            sim: ideal.sim(),
            gen: gens.len(),
            class: ideal.class_of_nilpotence(),
            d_point: d.coords.iter().map(format_q).collect(),
            dual_generators: duality.map(|du| du.dual(&gens).coords(rs)),
        }
    }

    /// Generators in the compact `1121` notation, `;`-joined.
    pub fn generator_string(&self) -> String {
        self.generators
            .iter()
            .map(|g| format_coords(g))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Splits on commas outside parentheses and brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' | ';' if depth == 0 => {
                out.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().map(str::trim).filter(|t| !t.is_empty()).collect()
}

fn parse_box(token: &str) -> Option<(usize, usize)> {
    let inner = token.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Coordinates of one generator token.
///
/// Accepted: a box `(i,j)` in types A, B, C; a digit string of length equal
/// to the rank; a bracketed list `[c1,...,cp]`; or a sum of simple-root
/// indices such as `2+3+3`.
pub fn parse_root(rs: &RootSystem, token: &str) -> Result<Vec<i32>> {
    let bad = || Error::Parse {
        what: "root",
        input: token.to_string(),
    };
    let p = rs.rank();
    if token.starts_with('(') {
        let (i, j) = parse_box(token).ok_or_else(bad)?;
        let max_j = match rs.cartan_type() {
            CartanType::A => p + 1,
            CartanType::B | CartanType::C => 2 * p + 1 - i,
            _ => return Err(bad()),
        };
        if i == 0 || i >= j || j > max_j {
            return Err(bad());
        }
        return Ok(match rs.cartan_type() {
            CartanType::A => box_to_root_a(p, (i, j)),
            CartanType::B => box_to_root_b(p, (i, j)),
            _ => box_to_root_c(p, (i, j)),
        });
    }
    if let Some(inner) = token.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let v: Vec<i32> = inner
            .split(',')
            .map(|c| c.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        return if v.len() == p { Ok(v) } else { Err(bad()) };
    }
    if token.contains('+') || token.len() != p {
        let mut v = vec![0; p];
        for part in token.split('+') {
            let k: usize = part.trim().parse().map_err(|_| bad())?;
            if k == 0 || k > p {
                return Err(bad());
            }
            v[k - 1] += 1;
        }
        return Ok(v);
    }
    token
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as i32).ok_or_else(bad))
        .collect()
}

/// Parses a generator list into an antichain of `rs`.
pub fn parse_generators(rs: &RootSystem, input: &str) -> Result<Antichain> {
    let mut roots = Vec::new();
    for token in split_top_level(input) {
        let coords = parse_root(rs, token)?;
        roots.push(rs.root_index(&coords).ok_or_else(|| Error::Parse {
            what: "positive root",
            input: token.to_string(),
        })?);
    }
    Antichain::new(rs, roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{enumerate_ideals, up_closure};

    fn rs(t: CartanType, p: usize) -> RootSystem {
        RootSystem::new(t, p).unwrap()
    }

    #[test]
    fn token_forms() {
        let c3 = rs(CartanType::C, 3);
        assert_eq!(parse_root(&c3, "1+2").unwrap(), vec![1, 1, 0]);
        assert_eq!(parse_root(&c3, "2+2+3").unwrap(), vec![0, 2, 1]);
        assert_eq!(parse_root(&c3, "121").unwrap(), vec![1, 2, 1]);
        assert_eq!(parse_root(&c3, "[2,2,1]").unwrap(), vec![2, 2, 1]);
        assert_eq!(parse_root(&c3, "3").unwrap(), vec![0, 0, 1]);
        assert_eq!(parse_root(&c3, "(1,6)").unwrap(), vec![2, 2, 1]);
        assert!(parse_root(&c3, "(1,7)").is_err());
        assert!(parse_root(&c3, "4").is_err());
        assert!(parse_root(&c3, "x").is_err());
        let a6 = rs(CartanType::A, 6);
        assert_eq!(parse_root(&a6, "(2,5)").unwrap(), vec![0, 1, 1, 1, 0, 0]);
        assert!(parse_root(&rs(CartanType::D, 4), "(1,2)").is_err());
    }

    #[test]
    fn generator_lists() {
        let a6 = rs(CartanType::A, 6);
        let g = parse_generators(&a6, "(1,5),(2,6),(3,7)").unwrap();
        assert_eq!(g.len(), 3);
        let c3 = rs(CartanType::C, 3);
        assert_eq!(parse_generators(&c3, "").unwrap(), Antichain::empty());
        assert!(matches!(
            parse_generators(&c3, "1, 1+2"),
            Err(Error::NotAntichain(_, _))
        ));
        assert!(parse_generators(&c3, "202").is_err());
    }

    #[test]
    fn records_round_trip_through_json() {
        let c3 = rs(CartanType::C, 3);
        let d = Duality::new(&c3).unwrap();
        for ideal in enumerate_ideals(&c3) {
            let r = IdealRecord::new(&ideal, Some(&d));
            let text = serde_json::to_string(&r).unwrap();
            assert!(!text.contains('.'), "{text}");
            let back: IdealRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
            let again = parse_generators(&c3, &r.generator_string().replace(';', ",")).unwrap();
            assert_eq!(up_closure(&c3, &again), ideal);
        }
    }

    #[test]
    fn record_fields() {
        let a2 = rs(CartanType::A, 2);
        let full = IdealRecord::new(&Ideal::full(&a2), None);
        assert_eq!(full.generators, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!((full.size, full.sim, full.gen, full.class), (3, 2, 2, 2));
        assert_eq!(full.dual_generators, None);
        assert!(!serde_json::to_string(&full).unwrap().contains("dual_generators"));
        let empty = IdealRecord::new(&Ideal::empty(&a2), None);
        assert_eq!(empty.d_point, vec!["0/1", "0/1"]);
    }
}
